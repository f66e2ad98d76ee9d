// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>
#include <string>

#include "app.hpp"
#include "oracles.hpp"
#include "pblring/algebra.hpp"
#include "pblring/catalog.hpp"
#include "pblring/classify.hpp"
#include "pblring/constructors.hpp"
#include "pblring/corpus.hpp"
#include "pblring/decomposition.hpp"

using namespace pblring;
using oracle::Set;
using Clock = std::chrono::steady_clock;

namespace {

struct Loaded {
  std::string label;
  std::shared_ptr<const IdealLattice> L;
};

std::vector<Loaded> load(const std::vector<CorpusEntry>& corpus) {
  std::vector<Loaded> out;
  for (const auto& e : corpus) {
    out.push_back({e.label, std::make_shared<const IdealLattice>(IdealLattice::compute(share(build(e.spec))))});
  }
  return out;
}

Set members(const IdealLattice& L, std::size_t i) { return L[i].members().elements(); }

Set image(const std::vector<Element>& proj, const Set& s) {
  std::set<Element> out;
  for (auto x : s) out.insert(proj[x]);
  return Set(out.begin(), out.end());
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Cli {
  int code;
  std::string out;
};

Cli run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "pblring");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = pblring::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

// Criteria return an empty string on success, otherwise the first problem.
using Check = std::function<std::string(std::string& info)>;

}  // namespace

int main() {
  const auto corpus = named_corpus("default");
  const auto t_load = Clock::now();
  const auto rings = load(corpus);
  std::cerr << "loaded " << rings.size() << " corpus rings in " << seconds_since(t_load) << " s\n";

  Cli full_run_a{}, full_run_b{};
  double full_run_seconds = 0;

  const std::vector<std::pair<std::string, Check>> criteria = {
      {"oracle equivalence of ideal enumeration (order <= 16)",
       [&](std::string& info) -> std::string {
         const auto t0 = Clock::now();
         std::size_t n = 0;
         for (const auto& r : rings) {
           if (r.L->ring().order() > 16) continue;
           ++n;
           std::vector<Set> got;
           for (const auto& i : r.L->ideals()) got.push_back(i.members().elements());
           if (got != oracle::all_ideals(r.L->ring())) return r.label;
         }
         const double s = seconds_since(t0);
         info = std::to_string(n) + " rings, " + std::to_string(s) + " s";
         return s < 60 ? "" : "over 60 s";
       }},
      {"product/residual adjointness on every ideal triple",
       [&](std::string& info) -> std::string {
         std::size_t triples = 0;
         for (const auto& r : rings) {
           const auto& L = *r.L;
           for (std::size_t x = 0; x < L.size(); ++x) {
             for (std::size_t y = 0; y < L.size(); ++y) {
               for (std::size_t z = 0; z < L.size(); ++z) {
                 ++triples;
                 if (L.leq(L.product(x, y), z) != L.leq(x, L.rimp(y, z)) ||
                     L.leq(L.product(y, x), z) != L.leq(x, L.limp(y, z))) {
                   return r.label;
                 }
               }
             }
           }
         }
         info = std::to_string(triples) + " triples";
         return "";
       }},
      {"multiplication ring iff PBLR-1",
       [&](std::string& info) -> std::string {
         std::size_t yes = 0;
         for (const auto& r : rings) {
           const bool mult = is_multiplication_ring(*r.L).holds;
           if (mult != check_pblr1(*r.L).holds) return r.label;
           if (r.L->ring().order() <= 16) {
             std::vector<Set> all;
             for (const auto& i : r.L->ideals()) all.push_back(i.members().elements());
             if (mult != oracle::is_multiplication_ring(r.L->ring(), all)) return r.label + " (oracle)";
           }
           yes += mult;
         }
         info = std::to_string(yes) + "/" + std::to_string(rings.size()) + " multiplication rings";
         return "";
       }},
      {"pseudo BL-ring iff A(R) is a pseudo BL-algebra",
       [&](std::string& info) -> std::string {
         std::size_t yes = 0;
         for (const auto& r : rings) {
           const bool v = is_pseudo_bl_ring(*r.L).holds;
           if (v != all_hold(check_pseudo_bl(ideal_algebra(*r.L)))) return r.label;
           yes += v;
         }
         info = std::to_string(yes) + "/" + std::to_string(rings.size()) + " pseudo BL-rings";
         return "";
       }},
      {"matrix ideal correspondence for M2(Z2), M2(Z3), M2(Z4)",
       [&](std::string& info) -> std::string {
         const auto t0 = Clock::now();
         for (std::size_t n : {2, 3, 4}) {
           const auto base = share(zmod(n));
           const auto R = IdealLattice::compute(base);
           const auto m = share(matrix_ring(*base, 2));
           const auto L = IdealLattice::compute(m);
           const std::string name = "M2(Z" + std::to_string(n) + ")";
           if (L.size() != R.size()) return name + ": lattice sizes differ";
           std::vector<std::size_t> to(R.size());
           std::set<std::size_t> hit;
           for (std::size_t i = 0; i < R.size(); ++i) {
             const auto mi = matrix_ideal(R[i], 2, m);
             const auto found = L.find(mi.members());
             if (!found) return name + ": image is not an ideal";
             to[i] = *found;
             hit.insert(*found);
           }
           if (hit.size() != L.size()) return name + ": not a bijection";
           for (std::size_t i = 0; i < R.size(); ++i) {
             for (std::size_t j = 0; j < R.size(); ++j) {
               if (L.leq(to[i], to[j]) != R.leq(i, j) || L.join(to[i], to[j]) != to[R.join(i, j)] ||
                   L.meet(to[i], to[j]) != to[R.meet(i, j)] || L.product(to[i], to[j]) != to[R.product(i, j)] ||
                   L.rimp(to[i], to[j]) != to[R.rimp(i, j)] || L.limp(to[i], to[j]) != to[R.limp(i, j)]) {
                 return name + ": operation not preserved";
               }
             }
           }
         }
         info = std::to_string(seconds_since(t0)) + " s";
         return "";
       }},
      {"quotient identities (J/I)* = (J->I)/I and residual transport (order <= 12)",
       [&](std::string& info) -> std::string {
         std::size_t pairs = 0;
         for (const auto& r : rings) {
           const auto& L = *r.L;
           const auto& R = L.ring();
           if (R.order() > 12) continue;
           for (std::size_t i = 0; i < L.size(); ++i) {
             const auto I = members(L, i);
             const auto Q = oracle::quotient(R, I);
             const auto q = quotient(R, L[i]);
             if (!(q.ring == Q)) return r.label + ": quotient tables";
             const Set zero{Q.zero()};
             for (std::size_t j = 0; j < L.size(); ++j) {
               if (!L.leq(i, j)) continue;
               ++pairs;
               const auto J = members(L, j);
               const auto jq = image(q.projection, J);
               if (oracle::rimp(Q, jq, zero) != image(q.projection, oracle::rimp(R, J, I)) ||
                   oracle::limp(Q, jq, zero) != image(q.projection, oracle::limp(R, J, I))) {
                 return r.label + ": annihilator of J/I";
               }
               for (std::size_t k = 0; k < L.size(); ++k) {
                 if (!L.leq(i, k)) continue;
                 const auto K = members(L, k);
                 const auto kq = image(q.projection, K);
                 if (oracle::rimp(Q, jq, kq) != image(q.projection, oracle::rimp(R, J, K)) ||
                     oracle::limp(Q, jq, kq) != image(q.projection, oracle::limp(R, J, K))) {
                   return r.label + ": residual of J/I, K/I";
                 }
               }
             }
           }
         }
         info = std::to_string(pairs) + " pairs I <= J";
         return "";
       }},
      {"intersection of N*(P) over primes is {0} (idempotent-generated rings with a prime)",
       [&](std::string& info) -> std::string {
         std::size_t tested = 0;
         std::vector<std::string> bad;
         for (const auto& r : rings) {
           const auto res = check_n_star_meet(*r.L);
           if (!res.hypothesis_ok || res.vacuous) continue;
           ++tested;
           if (!res.holds) bad.push_back(r.label);
         }
         info = std::to_string(tested) + " rings tested";
         if (bad.empty()) return "";
         return std::to_string(bad.size()) + " failures, first " + bad.front();
       }},
      {"subdirect decomposition of every pseudo BL-ring",
       [&](std::string& info) -> std::string {
         std::size_t tested = 0, factors = 0;
         for (const auto& r : rings) {
           if (!is_pseudo_bl_ring(*r.L).holds) continue;
           ++tested;
           const auto d = subdirect_decomposition(*r.L);
           if (!d.kernels_meet_to_zero) return r.label + ": kernels do not meet to zero";
           if (!d.embedding_injective) return r.label + ": embedding not injective";
           for (const auto& f : d.factors) {
             ++factors;
             if (!f.subdirectly_irreducible || !f.pseudo_bl) return r.label + ": factor not an SI pseudo BL-ring";
             for (const auto& c : f.checks) {
               if (!c.holds) return r.label + ": factor check " + c.name;
             }
           }
         }
         info = std::to_string(tested) + " rings, " + std::to_string(factors) + " factors";
         return "";
       }},
      {"every theorem-tagged property passes on the default corpus",
       [&](std::string& info) -> std::string {
         const auto t0 = Clock::now();
         full_run_a = run_cli({"props", "--format", "json"});
         full_run_seconds = seconds_since(t0);
         const auto doc = nlohmann::json::parse(full_run_a.out);
         std::map<std::string, std::size_t> fails;
         std::size_t theorem_fails = 0;
         for (const auto& p : doc["properties"]) {
           if (p["tag"] != "theorem") continue;
           for (const auto& c : p["cells"]) {
             if (c["outcome"] == "fail") {
               ++fails[p["id"].get<std::string>()];
               ++theorem_fails;
             }
           }
         }
         info = std::to_string(doc["rings"].size()) + " rings, " + std::to_string(full_run_seconds) + " s, exit " +
                std::to_string(full_run_a.code);
         if (doc["rings"].size() < 40) return "corpus has fewer than 40 rings";
         if (full_run_seconds > 600) return "over 10 minutes";
         if ((theorem_fails > 0) != (full_run_a.code == pblring::cli::kExitInvariant)) return "exit code does not reflect failures";
         if (theorem_fails == 0) return "";
         std::string msg = std::to_string(theorem_fails) + " theorem failures:";
         for (const auto& [id, n] : fails) msg += " " + id + "x" + std::to_string(n);
         return msg;
       }},
      {"two consecutive runs give byte-identical JSON and DOT",
       [&](std::string& info) -> std::string {
         if (full_run_a.out.empty()) full_run_a = run_cli({"props", "--format", "json"});
         full_run_b = run_cli({"props", "--format", "json"});
         if (full_run_a.out != full_run_b.out) return "props JSON differs";
         std::size_t docs = 1;
         for (const auto& r : rings) {
           if (r.L->ring().order() > 256) continue;
           for (const auto& args : std::vector<std::vector<std::string>>{
                    {"ideals", r.label, "--format", "dot"},
                    {"ideals", r.label, "--format", "json"},
                    {"check", r.label, "--format", "json"},
                    {"decompose", r.label, "--format", "json"}}) {
             const auto a = run_cli(args), b = run_cli(args);
             ++docs;
             if (a.out != b.out || a.code != b.code) return args[0] + " " + r.label + " differs";
           }
         }
         info = std::to_string(docs) + " documents compared";
         return "";
       }},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    std::string info;
    std::string problem;
    try {
      problem = criteria[k].second(info);
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const bool ok = problem.empty();
    failed += !ok;
    std::cout << "criterion " << (k + 1) << ": " << (ok ? "PASS" : "FAIL") << "  " << criteria[k].first;
    if (!info.empty()) std::cout << " [" << info << "]";
    if (!ok) std::cout << " -- " << problem;
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
