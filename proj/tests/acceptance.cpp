// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "metab/metab.hpp"
#include "support/generators.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace metab;
using metab::testing::Rng;
using metab::testing::uniform;

namespace {

  struct Check {
    bool              ok = true;
    std::stringstream note;

    void require(bool cond, std::string const& what) {
      if (!cond && ok) {
        ok = false;
        note << what << "; ";
      }
    }
  };

  using Criterion = std::function<void(Check&)>;

  EdgeFlow unit_plaquette() {
    return plaquette_boundary(Plaquette{{0, 0}, 1, 2});
  }

  // Cochain with vertices and cycles inside [-3, 3]^2, zero at the origin.
  Cochain box_cochain(Rng& rng) {
    Cochain            u(2);
    std::vector<Point> support{{1, 0}, {0, 1}, {1, 1}};
    for (long long n = uniform(rng, 0, 5); n > 0; --n) {
      support.push_back(metab::testing::random_point(rng, 2, -3, 3));
    }
    for (Point const& v : support) {
      if (v.is_zero()) {
        continue;
      }
      EdgeFlow cycle(2);
      for (int m = 0; m < 3; ++m) {
        cycle += Integer(uniform(rng, -3, 3))
                 * plaquette_boundary(Plaquette{metab::testing::random_point(rng, 2, -3, 2), 1, 2});
      }
      u.add(v, cycle);
    }
    return u;
  }

  void ac01_beta(Check& c) {
    c.require(beta(CocycleRule::canonical(2)) == 1, "beta(canonical) != 1");
    for (long long k = -3; k <= 3; ++k) {
      c.require(beta(CocycleRule::scaled(2, k)) == k, "beta(k c) != k for k=" + std::to_string(k));
    }
    Rng rng(101);
    int   changed = 0;
    Point e1{1, 0}, e2{0, 1};
    for (int n = 0; n < 50; ++n) {
      CocycleRule y = CocycleRule::perturbed(CocycleRule::canonical(2), box_cochain(rng));
      changed += y(e1, e2) != canonical_cocycle(e1, e2);
      c.require(beta(y) == 1, "perturbed beta != 1 at sample " + std::to_string(n));
    }
    c.require(changed > 0, "no perturbation changed the cocycle");
    c.note << changed << " of 50 perturbations change y(e1,e2)";
  }

  void ac02_cocycle_identity(Check& c) {
    Rng                      rng(102);
    std::vector<CocycleRule> rules{CocycleRule::canonical(2), CocycleRule::scaled(2, 3),
                                   CocycleRule::scaled(2, -2),
                                   CocycleRule::perturbed(CocycleRule::canonical(2), box_cochain(rng)),
                                   CocycleRule::perturbed(CocycleRule::scaled(2, -1), box_cochain(rng))};
    for (int n = 0; n < 1000; ++n) {
      Point g1 = metab::testing::random_point(rng, 2, -4, 4);
      Point g2 = metab::testing::random_point(rng, 2, -4, 4);
      Point g3 = metab::testing::random_point(rng, 2, -4, 4);
      for (std::size_t r = 0; r < rules.size(); ++r) {
        c.require(check_cocycle_identity(rules[r], g1, g2, g3),
                  "identity fails for rule " + std::to_string(r) + " at (" + g1.to_string()
                      + ")(" + g2.to_string() + ")(" + g3.to_string() + ")");
      }
    }
  }

  void ac03_metabelian_law(Check& c) {
    Rng rng(103);
    for (int n = 0; n < 500; ++n) {
      std::size_t d = 2 + n % 2;
      auto        w = [&] { return metab::testing::random_word(rng, d, 8); };
      Word        u = w(), v = w(), s = w(), t = w();
      Word        x = commutator(commutator(u, v), commutator(s, t));
      c.require(met_from_word(x) == met_identity(d), "[[u,v],[s,t]] nontrivial: " + to_string(x));
    }
  }

  void ac04_fox_oracle(Check& c) {
    Rng rng(104);
    for (int n = 0; n < 1000; ++n) {
      std::size_t    d = 2 + n % 2;
      Word           w = metab::testing::random_word(rng, d, 40);
      FoxImage       f = fox_image(w);
      MetabelianElem m = met_from_word(w);
      std::size_t    terms = 0;
      bool           same  = f.monomial == m.endpoint;
      for (std::size_t i = 1; i <= d; ++i) {
        for (auto const& [mono, coeff] : f.derivatives[i - 1]) {
          same = same && m.flow.at(EdgeKey{mono, i}) == coeff;
          ++terms;
        }
      }
      c.require(same && terms == m.flow.size(), "fox slice mismatch for " + to_string(w));
    }
    int equal_pairs = 0;
    for (int n = 0; n < 600; ++n) {
      std::size_t d  = 2 + n % 2;
      Word        w1 = metab::testing::random_word(rng, d, 12);
      Word        w2(d);
      switch (n % 3) {
        case 0:
          w2 = metab::testing::random_word(rng, d, 12);
          break;
        case 1: {
          // insert a conjugate of an element of F'' in front: equal in Met(d)
          auto r = [&] { return metab::testing::random_word(rng, d, 4); };
          Word p = r();
          w2     = concat(concat(p, commutator(commutator(r(), r()), commutator(r(), r()))),
                          concat(invert(p), w1));
          break;
        }
        default: {
          // same endpoint, different route: usually unequal
          w2 = concat(metab::testing::random_loop(rng, d, 6), w1);
          break;
        }
      }
      bool met = met_eq(w1, w2);
      equal_pairs += met;
      c.require(met == (fox_image(w1) == fox_image(w2)),
                "met_eq disagrees with fox for " + to_string(w1) + " / " + to_string(w2));
    }
    c.require(equal_pairs >= 150, "too few equal pairs exercised");
    c.note << "1000 words, 600 pairs (" << equal_pairs << " equal)";
  }

  void ac05_exhaustive(Check& c) {
    std::vector<Word> words;
    for (std::size_t len = 0; len <= 6; ++len) {
      auto layer = metab::testing::reduced_words(2, len);
      words.insert(words.end(), layer.begin(), layer.end());
    }
    std::vector<MetabelianElem> elems;
    std::map<std::string, std::size_t> fibre_of;
    std::vector<std::size_t> fibre(words.size());
    for (std::size_t n = 0; n < words.size(); ++n) {
      elems.push_back(met_from_word(words[n]));
      std::string key = to_json(elems.back()).dump();
      fibre[n]        = fibre_of.try_emplace(key, fibre_of.size()).first->second;
    }
    // met_eq on every pair is exactly "same fibre" and agrees with the Fox
    // image, so it is reflexive, symmetric and transitive.
    std::vector<FoxImage> fox;
    for (Word const& w : words) {
      fox.push_back(fox_image(w));
    }
    for (std::size_t a = 0; a < words.size(); ++a) {
      for (std::size_t b = 0; b < words.size(); ++b) {
        bool eq = elems[a] == elems[b];
        c.require(eq == (fibre[a] == fibre[b]), "fibre key mismatch");
        c.require(eq == (fox[a] == fox[b]), "fox disagrees on " + to_string(words[a]) + " / "
                                                + to_string(words[b]));
      }
    }
    // congruence: multiplying both members of a fibre by any generator on
    // either side stays within one fibre
    std::map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t n = 0; n < words.size(); ++n) {
      members[fibre[n]].push_back(n);
    }
    std::size_t nontrivial = 0;
    for (auto const& [id, list] : members) {
      nontrivial += list.size() > 1;
      for (std::size_t axis = 1; axis <= 2; ++axis) {
        for (int s : {1, -1}) {
          Word g = free_reduce(2, std::vector<Letter>{{axis, s}});
          for (std::size_t n = 1; n < list.size(); ++n) {
            Word const& u = words[list[0]];
            Word const& v = words[list[n]];
            c.require(met_eq(concat(u, g), concat(v, g)) && met_eq(concat(g, u), concat(g, v)),
                      "congruence fails");
          }
        }
      }
    }
    for (std::size_t a = 0; a < words.size(); ++a) {
      for (std::size_t b = 0; b < words.size(); b += 7) {
        MetabelianElem lhs = met_from_word(concat(words[a], words[b]));
        c.require(lhs == met_mul(elems[a], elems[b]), "product not compatible with fibres");
      }
    }
    c.note << words.size() << " words, " << members.size() << " fibres, " << nontrivial
           << " with more than one word";
  }

  void ac06_homology(Check& c) {
    Rng rng(106);
    for (int n = 0; n < 500; ++n) {
      EdgeFlow     f = evaluate_path(metab::testing::random_loop(rng, 2, 40)).flow;
      PlaquetteSum s = decompose_cycle_2d(f);
      c.require(plaquette_boundary(s) == f, "2d reconstruction fails");
      auto pick = [&](std::size_t count) {
        return static_cast<std::size_t>(uniform(rng, 0, static_cast<long long>(count) - 1));
      };
      c.require(detail::peel_planar(f, pick) == s, "peeling order changes coefficients");
      c.require(metab::testing::column_integral(f) == s, "column integral disagrees");
    }
    for (int n = 0; n < 200; ++n) {
      std::size_t d = 3 + n % 2;
      EdgeFlow    f = evaluate_path(metab::testing::random_loop(rng, d, 30)).flow;
      c.require(plaquette_boundary(decompose_cycle(f)) == f, "general rank reconstruction fails");
    }
    for (int n = 0; n < 100; ++n) {
      std::size_t              d = 3 + n % 2;
      std::vector<std::size_t> axes{1, 2, 3, 4};
      axes.resize(d);
      if (d == 4) {
        axes.erase(axes.begin() + uniform(rng, 0, 3));
      }
      Point base = metab::testing::random_point(rng, d, -5, 5);
      c.require(plaquette_boundary(cube_relation(base, axes[0], axes[1], axes[2])).empty(),
                "cube relation has nonzero boundary");
    }
  }

  void ac07_heisenberg(Check& c) {
    c.require(heis_eval(parse_word("x1 x2 x1^-1 x2^-1", 2)).area(1, 2) == 1, "A12 != 1");
    Rng rng(107);
    for (int n = 0; n < 300; ++n) {
      std::size_t    d = 2 + n % 2;
      Word           w = metab::testing::random_loop(rng, d, 30);
      HeisenbergElem h = heis_eval(w);
      EdgeFlow       f = evaluate_path(w).flow;
      for (std::size_t i = 1; i <= d; ++i) {
        for (std::size_t j = i + 1; j <= d; ++j) {
          c.require(h.area(i, j) == algebraic_area(project_flow(f, i, j)),
                    "area mismatch for " + to_string(w));
        }
      }
    }
    for (int n = 0; n < 300; ++n) {
      std::size_t d = 2 + n % 2;
      auto        w = [&] { return metab::testing::random_word(rng, d, 8); };
      c.require(heis_trivial(commutator(commutator(w(), w()), w())), "[[u,v],s] nontrivial");
    }
  }

  void ac08_satellite(Check& c) {
    for (long long k = -3; k <= 3; ++k) {
      SatelliteElem comm = sat_comm(sat_generator('x', k), sat_generator('y', k));
      c.require(comm == sat_pow(sat_generator('z', k), k), "[x,y] != z^k for k=" + std::to_string(k));
      if (k == 0) {
        c.require(comm == sat_identity(0), "split case: commutator not trivial");
      }
    }
    for (long long k = 1; k <= 5; ++k) {
      auto order = sat_abelianization_order_of_z(k);
      c.require(order && *order == k, "order of z != |k| for k=" + std::to_string(k));
    }
    c.require(!sat_abelianization_order_of_z(0), "k=0 should give infinite order");
    Rng               rng(108);
    static char const gens[] = {'x', 'y', 'z'};
    for (long long k : {2, 3}) {
      int in_m = 0, in_comm = 0, in_n = 0;
      for (int n = 0; n < 300; ++n) {
        SatelliteElem a = sat_identity(k);
        // bias towards N: balanced x/y exponents half of the time
        long long len = uniform(rng, 0, 12);
        for (long long m = 0; m < len; ++m) {
          SatelliteElem g = sat_generator(gens[uniform(rng, 0, 2)], k);
          a               = sat_mul(a, uniform(rng, 0, 1) ? g : sat_inv(g));
        }
        if (n % 2) {
          a = sat_comm(a, sat_generator(gens[n % 3], k));
        }
        if (n % 5 == 0) {
          a = sat_pow(a, k);
        }
        bool m_ = sat_in_M(a), c_ = sat_in_commutant(a), n_ = sat_in_N(a);
        in_m += m_;
        in_comm += c_;
        in_n += n_;
        c.require(!m_ || c_, "M not inside commutant");
        c.require(!c_ || n_, "commutant not inside N");
      }
      c.note << "k=" << k << ": M " << in_m << ", [G,G] " << in_comm << ", N " << in_n << "; ";
    }
  }

  void ac09_equivariance(Check& c) {
    Rng rng(109);
    for (int n = 0; n < 500; ++n) {
      std::size_t d = 2 + n % 2;
      Word        w = metab::testing::random_word(rng, d, 15);
      Word        a = metab::testing::random_loop(rng, d, 15);
      c.require(evaluate_path(concat(concat(w, a), invert(w))).flow
                    == translate(evaluate_path(a).flow, abelian_image(w)),
                "equivariance fails");
    }
  }

  void ac10_section_defect(Check& c) {
    for (std::size_t d : {2u, 3u}) {
      std::vector<Point> box;
      std::size_t        count = 1;
      for (std::size_t a = 0; a < d; ++a) {
        count *= 7;
      }
      for (std::size_t n = 0; n < count; ++n) {
        Point       p(d);
        std::size_t r = n;
        for (std::size_t a = 1; a <= d; ++a) {
          p(a) = static_cast<long long>(r % 7) - 3;
          r /= 7;
        }
        box.push_back(p);
      }
      std::vector<MetabelianElem> omega;
      for (Point const& g : box) {
        omega.push_back(met_from_word(canonical_path(g)));
      }
      for (std::size_t a = 0; a < box.size(); ++a) {
        for (std::size_t b = 0; b < box.size(); ++b) {
          Point const&   g1  = box[a];
          Point const&   g2  = box[b];
          MetabelianElem lhs = met_from_word(concat(canonical_path(g1), canonical_path(g2)));
          MetabelianElem rhs = met_mul(MetabelianElem{Point(d), canonical_cocycle(g1, g2)},
                                       met_from_word(canonical_path(g1 + g2)));
          c.require(lhs == rhs, "section defect fails at (" + g1.to_string() + "),("
                                    + g2.to_string() + ")");
          c.require(met_mul(omega[a], omega[b]) == lhs, "alpha section not multiplicative");
        }
      }
    }
  }

  int run_binary(std::string const& args) {
    int raw = std::system((std::string(METAB_CLI_PATH) + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  }

  void ac11_cli(Check& c) {
    auto results = metab::testing::run_golden_matrix(METAB_GOLDEN_DIR);
    for (auto const& r : results) {
      c.require(r.ok(), "golden mismatch: " + r.golden.name);
    }
    // deterministic across repeated runs
    auto again = metab::testing::run_golden_matrix(METAB_GOLDEN_DIR);
    for (std::size_t n = 0; n < results.size(); ++n) {
      c.require(again[n].actual == results[n].actual, "nondeterministic: " + results[n].golden.name);
    }
    c.require(run_binary("eq --group metabelian --d 2 'x1 x2' 'x2 x1'") == 1, "eq unequal exit != 1");
    c.require(run_binary("eq --group metabelian --d 2 'x1 x2 x1^-1 x2^-1' 'x2 x1 x2^-1 x1^-1 x1 x2 x1^-1 x2^-1 x1 x2 x1^-1 x2^-1'") == 0,
              "eq equal exit != 0");
    c.require(run_binary("eq --group metabelian --d 2 'x1 x5' 'x1'") == 2, "eq error exit != 2");
    c.note << results.size() << " golden cases";
  }

}  // namespace

int main() {
  std::vector<std::pair<char const*, Criterion>> criteria{
      {"AC01 beta: canonical = 1, scaled(k) = k, coboundary invariant", ac01_beta},
      {"AC02 cocycle identity on 1000 random triples", ac02_cocycle_identity},
      {"AC03 [[u,v],[s,t]] trivial in Met(d), 500 samples", ac03_metabelian_law},
      {"AC04 Fox derivatives equal flow slices; met_eq = Fox equality", ac04_fox_oracle},
      {"AC05 exhaustive length <= 6, d = 2: fibres form a congruence", ac05_exhaustive},
      {"AC06 plaquette decomposition and cube relations", ac06_homology},
      {"AC07 Heisenberg areas and 2-step nilpotency", ac07_heisenberg},
      {"AC08 Met_k(2): [x,y] = z^k, order of z, M < [G,G] < N", ac08_satellite},
      {"AC09 conjugation translates loop flows, 500 samples", ac09_equivariance},
      {"AC10 section defect equals canonical cocycle on [-3,3]^d", ac10_section_defect},
      {"AC11 CLI golden files and eq exit codes", ac11_cli},
  };
  int failures = 0;
  for (auto const& [name, run] : criteria) {
    Check c;
    auto  start = std::chrono::steady_clock::now();
    try {
      run(c);
    } catch (std::exception const& e) {
      c.ok = false;
      c.note << "exception: " << e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%.2fs)%s%s\n", c.ok ? "PASS" : "FAIL", name, secs,
                c.note.str().empty() ? "" : " -- ", c.note.str().c_str());
    failures += !c.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
