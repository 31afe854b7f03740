#include "ulat/lab/witness_file.hpp"

#include "ulat/convergence.hpp"
#include "ulat/expr.hpp"
#include "ulat/rational_line.hpp"

#include <json.hpp>

namespace ulat::lab {

namespace {

using nlohmann::json;

std::string field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw WitnessFileError(std::string("missing field '") + key + "'");
  if (!doc[key].is_string()) throw WitnessFileError(std::string("field '") + key + "' must be a string");
  return doc[key].get<std::string>();
}

std::size_t index_field(const json& doc, const char* key, std::size_t fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_number_unsigned()) throw WitnessFileError(std::string("field '") + key + "' must be a nonnegative integer");
  return doc[key].get<std::size_t>();
}

// The witness chain for index j is written in the variable j; the sequence
// parsers read k, so rename before parsing.
std::string j_to_k(std::string text) {
  for (auto& ch : text)
    if (ch == 'j') ch = 'k';
  return text;
}

template <class E, class Parse>
Verdict run_order_check(const auto& carrier, const json& doc, const std::string& mode, Parse parse,
                        const E& limit, std::size_t horizon) {
  const auto seq = parse(field(doc, "sequence"));
  if (mode == "O1") {
    O1Witness<E> w{parse(field(doc, "lower")), parse(field(doc, "upper")), index_field(doc, "start", 1)};
    return verify_O1(carrier, seq, limit, w, horizon);
  }
  if (mode == "O2") {
    O2Witness<E> w{parse(j_to_k(field(doc, "lower"))), {}, parse_eventual_index(field(doc, "eventual")),
                   UpperFamily::chain};
    const std::string upper = field(doc, "upper");
    if (upper == "cofinite-filter") {
      if constexpr (!std::is_same_v<E, FinCofSet>) {
        throw WitnessFileError("'cofinite-filter' is only available on the fincof carrier");
      } else {
        w.upper_family = UpperFamily::all_cofinite_sets;
        w.upper = parse("~{1..k}");
      }
    } else {
      w.upper = parse(j_to_k(upper));
    }
    return verify_O2(carrier, seq, limit, w, horizon);
  }
  throw WitnessFileError("mode must be O1 or O2, got '" + mode + "'");
}

}  // namespace

WitnessCheck check_witness_document(std::string_view json_text, std::optional<std::size_t> horizon_override) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw WitnessFileError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw WitnessFileError("witness document must be a JSON object");
  WitnessCheck out{field(doc, "carrier"), field(doc, "mode"), {}};
  const std::size_t horizon = horizon_override.value_or(index_field(doc, "horizon", kDefaultHorizon));
  if (horizon == 0) throw WitnessFileError("horizon must be positive");
  try {
    if (out.carrier == "qline") {
      const Rational limit = parse_rational(field(doc, "limit"));
      out.verdict = run_order_check<Rational>(RationalLine{}, doc, out.mode, parse_rational_sequence, limit, horizon);
    } else if (out.carrier == "fincof") {
      const auto limit_seq = parse_fincof_sequence(field(doc, "limit"));
      if (!limit_seq.periodic()) throw WitnessFileError("limit must be a fixed set");
      out.verdict = run_order_check<FinCofSet>(FinCofAlgebra{}, doc, out.mode, parse_fincof_sequence, limit_seq(1),
                                               horizon);
    } else {
      throw WitnessFileError("unsupported carrier '" + out.carrier + "' (expected qline or fincof)");
    }
  } catch (const TermSyntaxError& e) {
    throw WitnessFileError(std::string("term syntax: ") + e.what());
  }
  return out;
}

}  // namespace ulat::lab
