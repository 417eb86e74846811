#ifndef HOPFACT_REPORT_HPP_
#define HOPFACT_REPORT_HPP_

// JSON and plain-text views of classification results and suite verdicts.
//
// Objects use nlohmann::json's default (sorted) key order, so a document's
// bytes depend only on its content.

#include <cstdint>  // for uint64_t
#include <cstdio>   // for snprintf
#include <span>     // for span
#include <sstream>  // for ostringstream
#include <string>   // for string
#include <string_view>
#include <vector>   // for vector

#include "json.hpp"

#include "act.hpp"
#include "congruence.hpp"
#include "deciders.hpp"
#include "harness.hpp"
#include "monoid.hpp"

namespace hopfact {

inline constexpr int schema_version = 1;

using Json = nlohmann::json;

/// 64-bit FNV-1a, rendered as 16 lowercase hex digits.
inline std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Json table_json(std::span<Index const> flat, std::size_t rows,
                       std::size_t cols) {
  Json out = Json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    out.push_back(std::vector<Index>(flat.begin() + r * cols,
                                     flat.begin() + (r + 1) * cols));
  }
  return out;
}

inline Json to_json(Monoid const& m) {
  return table_json(m.table(), m.size(), m.size());
}

inline Json to_json(Act const& a) {
  return table_json(a.table(), a.size(), a.monoid().size());
}

inline Json to_json(Partition const& p) { return p.classes(); }

inline Json to_json(Congruence const& c) { return to_json(c.partition()); }

inline Json to_json(StrongVerdict const& v) {
  return {{"holds", v.holds}, {"index", v.index}};
}

inline Json to_json(CriteriaReport const& c) {
  return {{"criterion_1", to_json(c.stable_tail)},
          {"criterion_2", to_json(c.consecutive)},
          {"criterion_3", to_json(c.complement)}};
}

inline Json to_json(ChainReport const& c) {
  return {{"endomorphism", c.endomorphism},
          {"k_index", c.k_index},
          {"i_index", c.i_index},
          {"stable_kernel", to_json(c.stable_kernel)},
          {"stable_image", to_json(c.stable_image)}};
}

inline Json to_json(PropertyReport const& r) {
  return {{"act_size", r.act_size},
          {"end_size", r.end_size},
          {"hopfian", r.hopfian},
          {"co_hopfian", r.co_hopfian},
          {"strongly_hopfian", r.strongly_hopfian},
          {"strongly_hopfian_index", r.strongly_hopfian_index},
          {"strongly_co_hopfian", r.strongly_co_hopfian},
          {"strongly_co_hopfian_index", r.strongly_co_hopfian_index},
          {"fitting", r.fitting},
          {"noetherian", r.noetherian},
          {"artinian", r.artinian},
          {"quasi_injective", r.quasi_injective},
          {"quasi_projective", r.quasi_projective},
          {"end_commutative", r.end_commutative},
          {"end_strongly_pi_regular", r.end_strongly_pi_regular},
          {"lattice_size", r.lattice_size},
          {"max_chain_length", r.max_chain_length}};
}

/// A PropertyReport object extended with the act name, its endomorphisms
/// and their chain reports.
inline Json to_json(std::string const& name, Classification const& c,
                    std::vector<ActHom> const& endos) {
  Json out = to_json(c.report);
  out["act"] = name;
  Json chains = Json::array();
  for (auto const& chain : c.chains) {
    Json entry = to_json(chain);
    entry["map"] = endos[chain.endomorphism].map();
    chains.push_back(std::move(entry));
  }
  out["chains"] = std::move(chains);
  out["hopfian_criteria"] = to_json(c.hopfian_criteria);
  out["co_hopfian_criteria"] = to_json(c.co_hopfian_criteria);
  return out;
}

inline Json to_json(Witness const& w) {
  Json out{{"monoid", to_json(w.instance.monoid)}, {"detail", w.detail}};
  out["act"] = w.instance.act ? to_json(*w.instance.act) : Json(nullptr);
  out["subset"] = w.instance.subset ? Json(*w.instance.subset) : Json(nullptr);
  out["congruence"] =
      w.instance.congruence ? to_json(*w.instance.congruence) : Json(nullptr);
  Json maps = Json::array();
  for (auto const& f : w.maps) {
    maps.push_back(f.map());
  }
  out["maps"] = std::move(maps);
  return out;
}

inline Json to_json(Verdict const& v) {
  auto const& info = theorem_info(v.theorem);
  Json out{{"theorem", info.name},
           {"statement", info.statement},
           {"instances", v.instances},
           {"non_vacuous", v.non_vacuous},
           {"vacuous", v.instances - v.non_vacuous},
           {"failures", v.failures},
           {"passed", v.passed()},
           {"log", Json::object()}};
  for (auto const& [key, value] : v.log) {
    out["log"][key] = value;
  }
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return out;
}

inline Json report_document(std::string_view input,
                            std::vector<Json> reports,
                            std::vector<Verdict> const& verdicts) {
  Json verdict_array = Json::array();
  for (auto const& v : verdicts) {
    verdict_array.push_back(to_json(v));
  }
  return {{"schema_version", schema_version},
          {"input_digest", fnv1a_hex(input)},
          {"reports", Json(std::move(reports))},
          {"verdicts", std::move(verdict_array)}};
}

inline std::string dump(Json const& doc) { return doc.dump(2) + "\n"; }

namespace detail {

inline char const* yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) {
    s.append(width - s.size(), ' ');
  }
  return s;
}

inline std::string format_classes(Partition const& p) {
  std::string out;
  for (auto const& cls : p.classes()) {
    out += "{";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      out += (i ? "," : "") + std::to_string(cls[i]);
    }
    out += "}";
  }
  return out;
}

}  // namespace detail

/// Plain-text view of a classify report object (as built by to_json above).
inline std::string render_classification(Json const& r) {
  std::ostringstream out;
  auto row = [&](std::string const& label, std::string const& value) {
    out << detail::pad(label, 26) << value << "\n";
  };
  auto flag = [&](char const* key) {
    row(key, detail::yes_no(r.at(key).get<bool>()));
  };
  row("act", r.at("act").get<std::string>());
  row("size", std::to_string(r.at("act_size").get<std::size_t>()));
  row("|End|", std::to_string(r.at("end_size").get<std::size_t>()));
  flag("hopfian");
  flag("co_hopfian");
  row("strongly_hopfian",
      std::string(detail::yes_no(r.at("strongly_hopfian").get<bool>())) +
          " (index " +
          std::to_string(r.at("strongly_hopfian_index").get<std::size_t>()) +
          ")");
  row("strongly_co_hopfian",
      std::string(detail::yes_no(r.at("strongly_co_hopfian").get<bool>())) +
          " (index " +
          std::to_string(
              r.at("strongly_co_hopfian_index").get<std::size_t>()) +
          ")");
  flag("fitting");
  flag("noetherian");
  flag("artinian");
  flag("quasi_injective");
  flag("quasi_projective");
  flag("end_commutative");
  flag("end_strongly_pi_regular");
  row("congruences", std::to_string(r.at("lattice_size").get<std::size_t>()));
  row("max_chain_length",
      std::to_string(r.at("max_chain_length").get<std::size_t>()));
  out << "\n" << detail::pad("endomorphism", 26) << "k  i\n";
  for (auto const& c : r.at("chains")) {
    std::string map = "[";
    bool first = true;
    for (auto const& v : c.at("map")) {
      map += (first ? "" : " ") + std::to_string(v.get<std::size_t>());
      first = false;
    }
    map += "]";
    out << detail::pad(map, 26) << c.at("k_index").get<std::size_t>() << "  "
        << c.at("i_index").get<std::size_t>() << "\n";
  }
  return out.str();
}

inline std::string render_verdicts(std::vector<Verdict> const& verdicts) {
  std::ostringstream out;
  out << detail::pad("theorem", 9) << detail::pad("instances", 11)
      << detail::pad("non-vacuous", 13) << detail::pad("failures", 10)
      << "result\n";
  for (auto const& v : verdicts) {
    out << detail::pad(theorem_info(v.theorem).name, 9)
        << detail::pad(std::to_string(v.instances), 11)
        << detail::pad(std::to_string(v.non_vacuous), 13)
        << detail::pad(std::to_string(v.failures), 10)
        << (v.passed() ? "pass" : "FAIL") << "\n";
    for (auto const& [key, value] : v.log) {
      out << "         " << key << " = " << value << "\n";
    }
    if (v.witness) {
      out << "         witness: " << v.witness->detail << "\n";
    }
  }
  return out.str();
}

}  // namespace hopfact

#endif  // HOPFACT_REPORT_HPP_
