#ifndef HOPFACT_HARNESS_HPP_
#define HOPFACT_HARNESS_HPP_

// Executable theorem checks over an exhaustive corpus of small monoids and
// acts.
//
// Each theorem is an implication "hypothesis => conclusion" evaluated on an
// Instance.  Instances whose hypothesis fails are vacuous passes and are
// tallied separately.  A failing instance is kept as a Witness that can be
// re-evaluated on its own with recheck().

#include <algorithm>  // for sort, find
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <map>        // for map
#include <optional>   // for optional
#include <random>     // for mt19937_64
#include <set>        // for set
#include <span>       // for span
#include <string>     // for string
#include <utility>    // for move
#include <vector>     // for vector

#include "act.hpp"
#include "congruence.hpp"
#include "deciders.hpp"
#include "endomorphisms.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "monoid.hpp"

namespace hopfact {

inline constexpr int theorem_count = 14;

struct TheoremInfo {
  int id;
  char const* name;
  char const* statement;
};

inline constexpr TheoremInfo theorem_registry[theorem_count] = {
    {1, "T1", "noetherian implies hopfian"},
    {2, "T2", "artinian implies co-hopfian"},
    {3, "T3", "strongly hopfian implies hopfian; strongly co-hopfian implies "
              "co-hopfian"},
    {4, "T4", "the three strongly-hopfian criteria agree"},
    {5, "T5", "the three strongly-co-hopfian criteria agree"},
    {6, "T6", "monoid-level r(s^n) and s^n = s^{n+1}t tests agree with the "
              "act-level deciders on the regular act"},
    {7, "T7", "a proper retract of a strongly hopfian act is strongly "
              "hopfian"},
    {8, "T8", "a surjective image B of a strongly co-hopfian act, with every "
              "endomorphism of B induced, is strongly co-hopfian"},
    {9, "T9", "B fully invariant with B and A/B strongly hopfian implies A "
              "strongly hopfian"},
    {10, "T10", "strongly pi-regular End(A) implies strongly hopfian and "
                "strongly co-hopfian"},
    {11, "T11", "quasi-injective, strongly hopfian, commutative End(A) "
                "implies strongly co-hopfian and strongly pi-regular End(A)"},
    {12, "T12", "quasi-projective, strongly co-hopfian, commutative End(A) "
                "implies strongly hopfian and strongly pi-regular End(A)"},
    {13, "T13", "all factor acts co-hopfian iff all factor acts strongly "
                "co-hopfian"},
    {14, "T14", "all factor acts hopfian and co-hopfian iff all factor acts "
                "fitting"},
};

inline TheoremInfo const& theorem_info(int id) {
  if (id < 1 || id > theorem_count) {
    throw Error(ErrorKind::unknown_theorem,
                "unknown theorem id " + std::to_string(id));
  }
  return theorem_registry[id - 1];
}

/// Parses "T7" (case-insensitive T) or "7".
inline int parse_theorem_id(std::string const& text) {
  std::string digits = text;
  if (!digits.empty() && (digits[0] == 'T' || digits[0] == 't')) {
    digits.erase(0, 1);
  }
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos ||
      digits.size() > 3) {
    throw Error(ErrorKind::unknown_theorem, "unknown theorem '" + text + "'");
  }
  int const id = std::stoi(digits);
  theorem_info(id);
  return id;
}

/// Deliberate decider corruption, used to show that the harness surfaces
/// faults.  Never enabled outside tests.
struct FaultInjection {
  // Report every act with at least two elements as not hopfian.
  bool corrupt_hopfian = false;
};

struct CorpusSpec {
  std::size_t max_monoid_size = 3;
  std::size_t max_act_size = 4;
  std::vector<int> theorems;  // empty: all
  std::optional<std::uint64_t> seed;
  std::size_t samples = 0;
  FaultInjection fault;
  ClassifyOptions options;
};

/// One unit of work.  `act` is absent for monoid-level theorems; `subset`
/// holds a retract image (T7) or a subact (T9); `congruence` the kernel of
/// the surjection (T8).
struct Instance {
  Monoid monoid;
  std::optional<Act> act;
  std::optional<std::vector<Index>> subset;
  std::optional<Partition> congruence;
};

struct Witness {
  Instance instance;
  std::vector<ActHom> maps;
  std::string detail;
};

struct InstanceOutcome {
  bool hypothesis = false;
  bool holds = true;
  std::map<std::string, std::size_t> log;
  std::string detail;
  std::vector<ActHom> maps;
};

struct Verdict {
  int theorem = 0;
  std::size_t instances = 0;
  std::size_t non_vacuous = 0;
  std::size_t failures = 0;
  std::map<std::string, std::size_t> log;
  std::optional<Witness> witness;  // first failure

  [[nodiscard]] bool passed() const noexcept { return failures == 0; }
};

namespace detail {

inline bool decide_hopfian(Act const& a, std::span<ActHom const> endos,
                           FaultInjection const& fault) {
  if (fault.corrupt_hopfian && a.size() >= 2) {
    return false;
  }
  return is_hopfian(endos);
}

inline bool strongly_hopfian(std::span<ActHom const> endos) {
  return is_strongly_hopfian(endos, Criterion::consecutive).holds;
}

inline bool strongly_co_hopfian(std::span<ActHom const> endos) {
  return is_strongly_co_hopfian(endos, Criterion::consecutive).holds;
}

inline std::string describe_sets(std::vector<std::vector<Index>> const& sets) {
  std::string out = "{";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out += i ? ", {" : "{";
    for (std::size_t j = 0; j < sets[i].size(); ++j) {
      out += (j ? "," : "") + std::to_string(sets[i][j]);
    }
    out += "}";
  }
  return out + "}";
}

inline Act const& require_act(Instance const& instance) {
  if (!instance.act) {
    throw Error(ErrorKind::invalid_argument, "theorem needs an act instance");
  }
  return *instance.act;
}

struct FactorSummary {
  bool all_hopfian = true;
  bool all_co_hopfian = true;
  bool all_strongly_co_hopfian = true;
  bool all_fitting = true;
};

inline FactorSummary factor_summary(Act const& a, ClassifyOptions const& o,
                                    FaultInjection const& fault) {
  FactorSummary s;
  for (auto const& rho : enumerate_congruences(a, o.congruence_cap)) {
    auto const q = quotient_by_congruence(rho);
    auto const endos = endomorphisms(q.act, o.search_budget);
    bool const sh = strongly_hopfian(endos);
    bool const sch = strongly_co_hopfian(endos);
    s.all_hopfian = s.all_hopfian && decide_hopfian(q.act, endos, fault);
    s.all_co_hopfian = s.all_co_hopfian && is_co_hopfian(endos);
    s.all_strongly_co_hopfian = s.all_strongly_co_hopfian && sch;
    s.all_fitting = s.all_fitting && sh && sch;
  }
  return s;
}

}  // namespace detail

/// Evaluates one theorem on one instance.  `endos` must be End(act) in
/// lexicographic order (ignored for monoid-level theorems).
inline InstanceOutcome check_theorem(int id, Instance const& instance,
                                     std::span<ActHom const> endos,
                                     FaultInjection const& fault,
                                     ClassifyOptions const& o) {
  theorem_info(id);
  InstanceOutcome out;
  std::size_t const budget = o.search_budget;

  if (id == 6) {
    auto const& m = instance.monoid;
    auto const direct = monoid_hopf_properties(m);
    auto const endos = endomorphisms(regular_act(m), budget);
    bool const sh = detail::strongly_hopfian(endos);
    bool const sch = detail::strongly_co_hopfian(endos);
    out.hypothesis = true;
    out.holds = direct.strongly_hopfian == sh &&
                direct.strongly_co_hopfian == sch &&
                endos.size() == m.size();
    if (!out.holds) {
      out.detail = "monoid-level (" + std::to_string(direct.strongly_hopfian) +
                   "," + std::to_string(direct.strongly_co_hopfian) +
                   ") vs act-level (" + std::to_string(sh) + "," +
                   std::to_string(sch) + ")";
    }
    return out;
  }

  Act const& a = detail::require_act(instance);

  switch (id) {
    case 1: {
      out.hypothesis = chain_conditions(a, o.congruence_cap).noetherian;
      out.holds = !out.hypothesis || detail::decide_hopfian(a, endos, fault);
      if (!out.holds) {
        out.detail = "noetherian act reported as not hopfian";
      }
      break;
    }
    case 2: {
      out.hypothesis = chain_conditions(a, o.congruence_cap).artinian;
      out.holds = !out.hypothesis || is_co_hopfian(endos);
      if (!out.holds) {
        out.detail = "artinian act reported as not co-hopfian";
      }
      break;
    }
    case 3: {
      bool const sh = detail::strongly_hopfian(endos);
      bool const sch = detail::strongly_co_hopfian(endos);
      out.hypothesis = sh || sch;
      out.holds = (!sh || detail::decide_hopfian(a, endos, fault)) &&
                  (!sch || is_co_hopfian(endos));
      if (!out.holds) {
        out.detail = "strong property holds but the plain one fails";
      }
      break;
    }
    case 4:
    case 5: {
      auto const c = criteria_report(endos, id == 4);
      out.hypothesis = true;
      out.holds = c.booleans_agree() && c.indices_agree();
      out.log["index_criterion_1"] = c.stable_tail.index;
      out.log["index_criterion_2"] = c.consecutive.index;
      out.log["index_criterion_3"] = c.complement.index;
      if (c.complement.index != c.consecutive.index) {
        out.log["criterion_3_index_differs"] = 1;
      }
      if (!out.holds) {
        out.detail = "criteria disagree: (" +
                     std::to_string(c.stable_tail.holds) + "," +
                     std::to_string(c.consecutive.holds) + "," +
                     std::to_string(c.complement.holds) + ")";
      }
      break;
    }
    case 7: {
      if (!instance.subset) {
        throw Error(ErrorKind::invalid_argument, "T7 needs a retract image");
      }
      auto const image = as_act(Subact(a, *instance.subset)).act;
      auto const retract = is_retract_of(image, a, budget);
      bool const proper = retract && retract->proper;
      out.hypothesis = proper && detail::strongly_hopfian(endos);
      if (out.hypothesis) {
        out.holds =
            detail::strongly_hopfian(endomorphisms(image, budget));
        out.maps = {retract->proper->section, retract->proper->retraction};
        if (!out.holds) {
          out.detail = "proper retract is not strongly hopfian";
        }
      }
      break;
    }
    case 8: {
      if (!instance.congruence) {
        throw Error(ErrorKind::invalid_argument, "T8 needs a congruence");
      }
      auto const q = quotient_by_congruence(a, *instance.congruence);
      auto const end_b = endomorphisms(q.act, budget);
      bool const induced =
          !first_non_induced_endomorphism(q.projection, endos, end_b);
      out.hypothesis = induced && detail::strongly_co_hopfian(endos);
      if (has_section(q.projection, budget)) {
        out.log["with_section"] = 1;
      }
      if (out.hypothesis) {
        out.holds = detail::strongly_co_hopfian(end_b);
        out.maps = {q.projection};
        if (!out.holds) {
          out.detail = "image is not strongly co-hopfian";
        }
      }
      break;
    }
    case 9: {
      if (!instance.subset) {
        throw Error(ErrorKind::invalid_argument, "T9 needs a subact");
      }
      Subact const b(a, *instance.subset);
      if (!is_invariant_under(b, endos)) {
        break;
      }
      bool const b_sh = detail::strongly_hopfian(
          endomorphisms(as_act(b).act, budget));
      bool const quotient_sh = detail::strongly_hopfian(
          endomorphisms(rees_quotient(b).act, budget));
      out.hypothesis = b_sh && quotient_sh;
      if (out.hypothesis) {
        out.holds = detail::strongly_hopfian(endos);
        if (!out.holds) {
          out.detail = "act is not strongly hopfian";
        }
      }
      break;
    }
    case 10: {
      EndMonoid const e(std::vector<ActHom>(endos.begin(), endos.end()));
      out.hypothesis = is_strongly_pi_regular(e).holds;
      out.holds = !out.hypothesis || (detail::strongly_hopfian(endos) &&
                                      detail::strongly_co_hopfian(endos));
      if (!out.holds) {
        out.detail = "strongly pi-regular End(A) but not fitting";
      }
      break;
    }
    case 11: {
      EndMonoid const e(std::vector<ActHom>(endos.begin(), endos.end()));
      out.hypothesis = e.is_commutative() && detail::strongly_hopfian(endos) &&
                       is_quasi_injective(a, endos, budget).holds;
      if (out.hypothesis) {
        out.holds = detail::strongly_co_hopfian(endos) &&
                    is_strongly_pi_regular(e).holds;
        if (!out.holds) {
          out.detail = "conclusion fails for a quasi-injective act";
        }
      }
      break;
    }
    case 12: {
      EndMonoid const e(std::vector<ActHom>(endos.begin(), endos.end()));
      out.hypothesis =
          e.is_commutative() && detail::strongly_co_hopfian(endos) &&
          is_quasi_projective(a, endos, o.congruence_cap, budget).holds;
      if (out.hypothesis) {
        out.holds = detail::strongly_hopfian(endos) &&
                    is_strongly_pi_regular(e).holds;
        if (!out.holds) {
          out.detail = "conclusion fails for a quasi-projective act";
        }
      }
      break;
    }
    case 13: {
      auto const s = detail::factor_summary(a, o, fault);
      out.hypothesis = s.all_co_hopfian || s.all_strongly_co_hopfian;
      out.holds = s.all_co_hopfian == s.all_strongly_co_hopfian;
      if (!out.holds) {
        out.detail = "factor-act conditions disagree";
      }
      break;
    }
    case 14: {
      auto const s = detail::factor_summary(a, o, fault);
      bool const lhs = s.all_hopfian && s.all_co_hopfian;
      out.hypothesis = lhs || s.all_fitting;
      out.holds = lhs == s.all_fitting;
      if (!out.holds) {
        out.detail = "factor-act conditions disagree";
      }
      break;
    }
    default:
      break;
  }
  return out;
}

inline InstanceOutcome check_theorem(int id, Instance const& instance,
                                     FaultInjection const& fault = {},
                                     ClassifyOptions const& o = {}) {
  std::vector<ActHom> endos;
  if (id != 6) {
    endos = endomorphisms(detail::require_act(instance), o.search_budget);
  }
  return check_theorem(id, instance, endos, fault, o);
}

/// The instances a theorem is checked on for one act of the corpus.
inline std::vector<Instance> instances_for(int id, Act const& a,
                                           std::span<ActHom const> endos,
                                           ClassifyOptions const& o = {}) {
  std::vector<Instance> out;
  auto base = [&] { return Instance{a.monoid(), a, std::nullopt, std::nullopt}; };
  switch (id) {
    case 7: {
      // Retracts of A up to isomorphism are the images of its idempotent
      // endomorphisms; proper ones come from idempotents other than id.
      std::set<std::vector<Index>> images;
      for (auto const& e : endos) {
        if (compose(e, e) == e && !e.is_surjective()) {
          images.insert(image_subact(e).members());
        }
      }
      for (auto const& image : images) {
        auto inst = base();
        inst.subset = image;
        out.push_back(std::move(inst));
      }
      break;
    }
    case 8:
      for (auto const& rho : enumerate_congruences(a, o.congruence_cap)) {
        auto inst = base();
        inst.congruence = rho.partition();
        out.push_back(std::move(inst));
      }
      break;
    case 9:
      for (auto const& b : enumerate_subacts(a)) {
        auto inst = base();
        inst.subset = b.members();
        out.push_back(std::move(inst));
      }
      break;
    default:
      out.push_back(base());
      break;
  }
  return out;
}

/// The corpus: every monoid up to the size bound, every act over each up to
/// the act bound, then any seeded random samples.
struct Corpus {
  std::vector<Monoid> monoids;
  std::vector<Act> acts;
  std::vector<std::vector<ActHom>> endos;  // End(acts[i])
};

inline Corpus build_corpus(CorpusSpec const& spec) {
  if (spec.max_monoid_size == 0 || spec.max_act_size == 0) {
    throw Error(ErrorKind::invalid_argument, "corpus sizes must be >= 1");
  }
  Corpus corpus;
  for (std::size_t n = 1; n <= spec.max_monoid_size; ++n) {
    for (auto& m : enumerate_monoids(n)) {
      corpus.monoids.push_back(std::move(m));
    }
  }
  for (auto const& m : corpus.monoids) {
    for (std::size_t k = 1; k <= spec.max_act_size; ++k) {
      for (auto& a : enumerate_acts(m, k)) {
        corpus.acts.push_back(std::move(a));
      }
    }
  }
  for (auto const& a : corpus.acts) {
    corpus.endos.push_back(endomorphisms(a, spec.options.search_budget));
  }
  if (spec.seed && spec.samples > 0) {
    // Draws whose End(A) is too large to tabulate are redrawn.
    std::mt19937_64 rng(*spec.seed);
    std::size_t const lo = spec.max_act_size + 1;
    std::size_t const hi = spec.max_act_size + 2;
    std::size_t drawn = 0;
    for (std::size_t attempt = 0; drawn < spec.samples; ++attempt) {
      if (attempt >= 1000 * spec.samples) {
        throw Error(ErrorKind::search_budget_exceeded,
                    "could not draw enough sample acts");
      }
      auto const& m = corpus.monoids[rng() % corpus.monoids.size()];
      auto a = random_act(m, rng, lo, hi);
      auto endos = endomorphisms(a, spec.options.search_budget);
      if (endos.size() > end_monoid_cap) {
        continue;
      }
      corpus.acts.push_back(std::move(a));
      corpus.endos.push_back(std::move(endos));
      ++drawn;
    }
  }
  return corpus;
}

inline std::vector<int> selected_theorems(CorpusSpec const& spec) {
  std::vector<int> ids = spec.theorems;
  if (ids.empty()) {
    for (int id = 1; id <= theorem_count; ++id) {
      ids.push_back(id);
    }
  }
  for (int id : ids) {
    theorem_info(id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

inline void record(Verdict& v, Instance const& instance,
                   InstanceOutcome const& outcome) {
  ++v.instances;
  if (outcome.hypothesis) {
    ++v.non_vacuous;
  }
  for (auto const& [key, value] : outcome.log) {
    v.log[key] += value;
  }
  if (!outcome.holds) {
    ++v.failures;
    if (!v.witness) {
      v.witness = Witness{instance, outcome.maps, outcome.detail};
    }
  }
}

inline std::vector<Verdict> run_suite(Corpus const& corpus,
                                      CorpusSpec const& spec) {
  std::vector<Verdict> verdicts;
  for (int id : selected_theorems(spec)) {
    Verdict v;
    v.theorem = id;
    if (id == 6) {
      for (auto const& m : corpus.monoids) {
        Instance inst{m, std::nullopt, std::nullopt, std::nullopt};
        record(v, inst, check_theorem(id, inst, spec.fault, spec.options));
      }
    } else {
      for (std::size_t i = 0; i < corpus.acts.size(); ++i) {
        auto const& endos = corpus.endos[i];
        for (auto const& inst :
             instances_for(id, corpus.acts[i], endos, spec.options)) {
          record(v, inst,
                 check_theorem(id, inst, endos, spec.fault, spec.options));
        }
      }
    }
    // Criterion 3 indices are logged, not asserted.
    if (id == 4 || id == 5) {
      v.log.erase("index_criterion_1");
      v.log.erase("index_criterion_2");
      v.log.erase("index_criterion_3");
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

inline std::vector<Verdict> run_suite(CorpusSpec const& spec) {
  return run_suite(build_corpus(spec), spec);
}

/// Re-evaluates a failing verdict's witness in isolation.  Returns true if
/// the violation reproduces.
inline bool recheck(Verdict const& v, FaultInjection const& fault = {},
                    ClassifyOptions const& options = {}) {
  if (!v.witness) {
    return false;
  }
  return !check_theorem(v.theorem, v.witness->instance, fault, options).holds;
}

}  // namespace hopfact

#endif  // HOPFACT_HARNESS_HPP_
