// Copyright 2026 The extors Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "extors/verify.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "extors/corpus.hpp"
#include "extors/ext1.hpp"
#include "extors/text_io.hpp"

namespace extors {

namespace {

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

std::string pad4(std::size_t n) {
  std::string s = std::to_string(n);
  return std::string(s.size() < 4 ? 4 - s.size() : 0, '0') + s;
}

RingPtr case_ring(std::size_t index) {
  return index % 2 == 0 ? corpus_ring_univariate() : corpus_ring_bivariate();
}

CaseRecord run_checked(const std::string& id, const std::string& ref,
                       std::uint64_t seed,
                       const std::function<bool(std::string&)>& body) {
  CaseRecord rec;
  rec.case_id = id;
  rec.ref = ref;
  rec.seed = seed;
  Clock::time_point start = Clock::now();
  try {
    std::string detail;
    rec.pass = body(detail);
    rec.detail = std::move(detail);
  } catch (const std::exception& e) {
    rec.pass = false;
    rec.detail = std::string("exception: ") + e.what();
  }
  rec.millis = elapsed_ms(start);
  return rec;
}

using Task = std::function<std::vector<CaseRecord>()>;

// --- gcd suite -------------------------------------------------------------

std::vector<CaseRecord> gcd_case(const SuiteOptions& opt, std::size_t i) {
  RingPtr ring = case_ring(i);
  FPModule n = corpus_module(ring, opt.seed, CorpusProfile::torsion, i);
  return {run_checked("gcd." + pad4(i), "hom-gcd-iso", opt.seed,
                      [&](std::string& detail) {
                        GcdExt result = ext1_via_gcd(n);
                        detail = "a=" + to_string(result.gcd);
                        return result.witness.is_isomorphism();
                      })};
}

std::vector<CaseRecord> gcd_curated(const SuiteOptions& opt) {
  std::vector<CaseRecord> out;
  RingPtr uni = corpus_ring_univariate();
  RingPtr bi = corpus_ring_bivariate();
  Polynomial x1 = Polynomial::variable(uni, 0);
  Polynomial x = Polynomial::variable(bi, 0);
  Polynomial y = Polynomial::variable(bi, 1);

  std::vector<std::pair<std::string, FPModule>> cases;
  cases.emplace_back("square", FPModule::cyclic(uni, x1 * x1));
  {
    PolyMatrix m(bi, 1, 2);
    m.at(0, 0) = x;
    m.at(0, 1) = y;
    cases.emplace_back("plane-point", FPModule(std::move(m)));
  }
  cases.emplace_back("zero",
                     FPModule::cyclic(uni, Polynomial::one(uni)));
  cases.emplace_back("sum", FPModule::direct_sum(
                                FPModule::cyclic(bi, x * x),
                                FPModule::cyclic(bi, x * y + y)));
  for (auto& [name, module] : cases)
    out.push_back(run_checked("gcd.curated." + name, "hom-gcd-iso", opt.seed,
                              [&](std::string& detail) {
                                GcdExt result = ext1_via_gcd(module);
                                detail = "a=" + to_string(result.gcd);
                                return result.witness.is_isomorphism();
                              }));
  return out;
}

// --- ext1na suite ----------------------------------------------------------

std::vector<Polynomial> alpha_choices(Rng& rng, const RingPtr& ring) {
  Polynomial p = random_nonunit(rng, ring, 2);
  Polynomial q = random_nonunit(rng, ring, 1);
  return {p, q, p * q};
}

std::vector<CaseRecord> ext1na_case(const SuiteOptions& opt, std::size_t i) {
  std::vector<CaseRecord> out;
  RingPtr ring = case_ring(i);
  CorpusProfile profile =
      i % 7 == 3 ? CorpusProfile::free_module : CorpusProfile::mixed;
  FPModule n = corpus_module(ring, opt.seed, profile, i);
  Rng rng(opt.seed ^ (0xE1A0 + i));
  Ext1Oracle oracle(n);
  std::vector<Polynomial> alphas = alpha_choices(rng, ring);
  for (std::size_t a = 0; a < alphas.size(); ++a) {
    const Polynomial& f = alphas[a];
    std::string base = "ext1na." + pad4(i) + ".a" + std::to_string(a);
    try {
      DeltaPieces pieces = delta_pieces(n, f, oracle);
      out.push_back(run_checked(base + ".delta-kernel", "delta-kernel",
                                opt.seed, [&](std::string&) {
                                  return kernel(pieces.delta)
                                      .equals(image(pieces.reduction));
                                }));
      out.push_back(run_checked(base + ".delta-image", "delta-image",
                                opt.seed, [&](std::string&) {
                                  return image(pieces.delta)
                                      .equals(pieces.torsion.sub);
                                }));
    } catch (const std::exception& e) {
      CaseRecord rec;
      rec.case_id = base;
      rec.ref = "delta-kernel";
      rec.seed = opt.seed;
      rec.pass = false;
      rec.detail = std::string("exception: ") + e.what();
      out.push_back(std::move(rec));
    }
  }
  return out;
}

std::vector<CaseRecord> functoriality_case(const SuiteOptions& opt,
                                           std::size_t i) {
  RingPtr ring = case_ring(i);
  FPModule n = corpus_module(ring, opt.seed, CorpusProfile::mixed, 1000 + i);
  Rng rng(opt.seed ^ (0xF0C0 + i));
  Polynomial f = random_nonunit(rng, ring, 2);
  Polynomial g = random_nonunit(rng, ring, 1);
  return {run_checked(
      "ext1na.func." + pad4(i), "eta-square", opt.seed,
      [&](std::string&) {
        Ext1Oracle oracle(n);
        DeltaPieces from = delta_pieces(n, f, oracle);
        DeltaPieces to = delta_pieces(n, f * g, oracle);
        ModuleHom eta = quotient_scale_inclusion(from, to, g);
        ModuleHom incl = torsion_part_inclusion(from.torsion, to.torsion);
        return compose(to.induced, eta).equals(compose(incl, from.induced));
      })};
}

// --- hope suite ------------------------------------------------------------

std::vector<CaseRecord> hope_case(const SuiteOptions& opt, std::size_t i) {
  RingPtr ring = case_ring(i);
  Rng rng(opt.seed ^ (0x0BE0 + i));
  const int cls = static_cast<int>(i % 3);

  FPModule n = [&]() -> FPModule {
    if (cls == 2) {
      // Cyclic by a product of two distinct monic linear forms, so the
      // annihilator gcd has a proper divisor.
      Polynomial x = Polynomial::variable(ring, 0);
      Polynomial p = x + Polynomial::constant(
                             ring, Rational(static_cast<long>(rng.range(1, 3))));
      Polynomial q = x - Polynomial::constant(
                             ring, Rational(static_cast<long>(rng.range(1, 3))));
      return FPModule::cyclic(ring, p * q);
    }
    return corpus_module(ring, opt.seed, CorpusProfile::torsion, 2000 + i);
  }();

  Polynomial beta = [&]() -> Polynomial {
    Polynomial a = gcd_of_ideal(annihilator(n));
    if (cls == 0) {
      // Coprime to a: a monic linear form missing a's roots.
      Polynomial x = Polynomial::variable(ring, 0);
      for (long long c = 5;; ++c) {
        Polynomial cand = x + Polynomial::constant(ring, Rational(static_cast<long>(c)));
        if (gcd_poly(a, cand).is_one()) return cand;
      }
    }
    if (cls == 1) return rng.chance(1, 2) ? a : a * random_nonunit(rng, ring, 1);
    // cls == 2: one linear factor of the constructed annihilator.
    Polynomial x = Polynomial::variable(ring, 0);
    for (long long c = -3;; ++c) {
      Polynomial cand = x + Polynomial::constant(ring, Rational(static_cast<long>(c)));
      Polynomial common = gcd_poly(a, cand);
      if (!common.is_one()) return cand;
    }
  }();

  const char* label = cls == 0 ? "coprime" : cls == 1 ? "full" : "proper";
  return {run_checked("hope." + pad4(i), "hom-gcd-factorization", opt.seed,
                      [&](std::string& detail) {
                        GcdFactorizationReport rep =
                            verify_hom_gcd_factorization(n, beta);
                        detail = std::string("class=") + label +
                                 " common=" + to_string(rep.common);
                        return rep.equal;
                      })};
}

// --- stab suite ------------------------------------------------------------

std::vector<CaseRecord> stab_case(const SuiteOptions& opt, std::size_t i) {
  std::vector<CaseRecord> out;
  RingPtr ring = case_ring(i);
  CorpusProfile profile =
      i % 9 == 4 ? CorpusProfile::free_module : CorpusProfile::mixed;
  FPModule n = corpus_module(ring, opt.seed, profile, 3000 + i);
  std::string base = "stab." + pad4(i);
  try {
    StabilizationWitness witness = ext1_stabilizer(n);
    out.push_back(run_checked(
        base + ".stabilizer", "ext1-stabilizer", opt.seed,
        [&](std::string& detail) {
          detail = "alpha0=" + to_string(witness.stabilizer);
          Submodule full =
              Submodule::full(ring, witness.ext.cover_rank());
          return !annihilator(witness.ext).is_zero() &&
                 scalar_torsion(witness.ext, witness.stabilizer)
                     .sub.equals(full);
        }));
    out.push_back(run_checked(
        base + ".absorption", "ext1-stabilizer-absorbs", opt.seed,
        [&](std::string&) {
          Rng rng(opt.seed ^ (0x57AB + i));
          Submodule at_alpha0 =
              scalar_torsion(witness.ext, witness.stabilizer).sub;
          for (int k = 0; k < 5; ++k) {
            Polynomial f = random_polynomial(rng, ring, 2, 2, true);
            Submodule larger =
                scalar_torsion(witness.ext, witness.stabilizer * f).sub;
            if (!larger.equals(at_alpha0)) return false;
          }
          return true;
        }));
  } catch (const std::exception& e) {
    CaseRecord rec;
    rec.case_id = base + ".stabilizer";
    rec.ref = "ext1-stabilizer";
    rec.seed = opt.seed;
    rec.pass = false;
    rec.detail = std::string("exception: ") + e.what();
    out.push_back(std::move(rec));
  }
  return out;
}

// --- adjunction suite ------------------------------------------------------

std::vector<CaseRecord> adjunction_case(const SuiteOptions& opt,
                                        std::size_t i) {
  RingPtr ring = case_ring(i);
  FPModule n = corpus_module(ring, opt.seed, CorpusProfile::mixed, 4000 + i);
  Rng rng(opt.seed ^ (0xAD10 + i));
  Polynomial f = random_nonunit(rng, ring, 2);
  return {run_checked("adjunction." + pad4(i), "quotient-adjunction",
                      opt.seed, [&](std::string& detail) {
                        AdjunctionReport rep = verify_quotient_adjunction(n, f);
                        detail = "gens=" + std::to_string(rep.lhs_gens) + "/" +
                                 std::to_string(rep.rhs_gens);
                        return rep.bijective;
                      })};
}

std::vector<Task> build_tasks(const SuiteOptions& opt) {
  std::vector<Task> tasks;
  auto want = [&](const char* name) {
    return opt.suite == "all" || opt.suite == name;
  };
  if (want("gcd")) {
    for (std::size_t i = 0; i < opt.cases; ++i)
      tasks.push_back([=] { return gcd_case(opt, i); });
    tasks.push_back([=] { return gcd_curated(opt); });
  }
  if (want("ext1na")) {
    for (std::size_t i = 0; i < opt.cases; ++i)
      tasks.push_back([=] { return ext1na_case(opt, i); });
    const std::size_t triples = std::min<std::size_t>(opt.cases, 20);
    for (std::size_t i = 0; i < triples; ++i)
      tasks.push_back([=] { return functoriality_case(opt, i); });
  }
  if (want("hope")) {
    for (std::size_t i = 0; i < opt.cases; ++i)
      tasks.push_back([=] { return hope_case(opt, i); });
  }
  if (want("stab")) {
    for (std::size_t i = 0; i < opt.cases; ++i)
      tasks.push_back([=] { return stab_case(opt, i); });
  }
  if (want("adjunction")) {
    for (std::size_t i = 0; i < opt.cases; ++i)
      tasks.push_back([=] { return adjunction_case(opt, i); });
  }
  return tasks;
}

}  // namespace

bool is_known_suite(const std::string& name) {
  return name == "all" || name == "gcd" || name == "ext1na" ||
         name == "hope" || name == "stab" || name == "adjunction";
}

Report run_verification(const SuiteOptions& options) {
  if (!is_known_suite(options.suite))
    throw std::invalid_argument("unknown suite '" + options.suite + "'");
  if (options.cases < 1) throw std::invalid_argument("cases must be >= 1");

  std::vector<Task> tasks = build_tasks(options);
  std::vector<std::vector<CaseRecord>> results(tasks.size());
  Clock::time_point start = Clock::now();
  std::atomic<std::size_t> next{0};
  std::atomic<bool> aborted{false};

  auto worker = [&] {
    while (true) {
      if (options.budget_ms > 0 && elapsed_ms(start) > options.budget_ms) {
        aborted = true;
        return;
      }
      std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      results[i] = tasks[i]();
    }
  };

  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Report report;
  report.aborted = aborted.load();
  for (auto& batch : results)
    for (auto& rec : batch) report.records.push_back(std::move(rec));
  if (options.inject_failure >= 0 &&
      static_cast<std::size_t>(options.inject_failure) <
          report.records.size()) {
    auto& rec = report.records[options.inject_failure];
    rec.pass = false;
    rec.detail = "injected failure (testing aid)";
  }
  return report;
}

}  // namespace extors
