#include "nfsos/report.hpp"

#include <ostream>

#include "json.hpp"

namespace nfsos {

using json = nlohmann::ordered_json;

namespace {

json level_json(int v) { return v == kInfinity ? json("infinity") : json(v); }

json place_json(const Place& P) {
  if (P.is_real())
    return json{{"kind", "real"}, {"index", P.index}, {"interval", {P.lo.get_str(), P.hi.get_str()}},
                {"label", label(P)}};
  return json{{"kind", "finite"}, {"p", P.p},           {"e", P.e},
              {"f", P.f},         {"pi", format_polynomial(P.pi)}, {"label", label(P)}};
}

void report_error(const Error& e, bool as_json, std::ostream& out, std::ostream& err) {
  if (as_json) {
    json j{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (e.witness()) j["witness"] = place_json(*e.witness());
    out << j.dump() << "\n";
  } else {
    err << "error: " << e.what();
    if (e.witness()) err << " [witness " << label(*e.witness()) << "]";
    err << "\n";
  }
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::ReduciblePolynomial:
    case ErrorKind::NonMonic:
    case ErrorKind::ZeroInput:
    case ErrorKind::DivisionByZero:
      return kExitInput;
    case ErrorKind::NotASumOfSquares:
      return kExitNotSum;
    case ErrorKind::NonMaximalOrderAtP:
    case ErrorKind::DiscriminantTooLarge:
      return kExitScope;
    case ErrorKind::PrimeSearchExhausted:
    case ErrorKind::SearchBoundExceeded:
      return kExitSearch;
    default:
      return kExitInternal;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    Field K = NumberField::create(config.field_poly);
    FieldElement a = parse_element(K, config.element);
    if (a.is_zero()) raise(ErrorKind::ZeroInput, "the element must be nonzero");
    LengthReport rep = compute_length(a);
    if (rep.length == kInfinity)
      raise(ErrorKind::NotASumOfSquares,
            a.to_string() + " is not totally positive (negative at " + label(*rep.negative_place) + ")",
            rep.negative_place);
    json j{{"field", K->polynomial_string()},
           {"element", a.to_string()},
           {"level", level_json(rep.level)},
           {"length", rep.length}};
    std::vector<std::string> summands;
    bool verified = false;
    if (!config.length_only) {
      Decomposition d = decompose(a, config.strategy);
      for (auto& c : d.summands) summands.push_back(c.to_string());
      verified = d.verified && verify_sum(a, d.summands);
      if (!verified) raise(ErrorKind::Internal, "decomposition did not verify");
      j["summands"] = summands;
      j["verified"] = verified;
    }
    if (config.json) {
      out << j.dump() << "\n";
    } else {
      out << "field:   Q[x]/(" << K->polynomial_string() << ")\n";
      out << "element: " << a.to_string() << "\n";
      out << "level:   " << (rep.level == kInfinity ? "infinity" : std::to_string(rep.level)) << "\n";
      out << "length:  " << rep.length << "\n";
      if (!config.length_only) {
        out << a.to_string() << " =";
        for (std::size_t i = 0; i < summands.size(); ++i) out << (i ? " + " : " ") << "(" << summands[i] << ")^2";
        out << "\nverified: " << (verified ? "true" : "false") << "\n";
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    report_error(e, config.json, out, err);
    return exit_code_for(e.kind());
  }
}

int verify(const std::string& field_poly, const std::string& element, const std::vector<std::string>& summands,
           std::ostream& out, std::ostream& err) {
  try {
    Field K = NumberField::create(field_poly);
    FieldElement a = parse_element(K, element);
    std::vector<FieldElement> cs;
    for (auto& s : summands) cs.push_back(parse_element(K, s));
    if (verify_sum(a, cs)) {
      out << "ok: " << cs.size() << " squares sum to " << a.to_string() << "\n";
      return kExitOk;
    }
    FieldElement s = K->zero();
    for (auto& c : cs) s = s + c * c;
    err << "mismatch: squares sum to " << s.to_string() << ", expected " << a.to_string() << "\n";
    return kExitMismatch;
  } catch (const Error& e) {
    report_error(e, false, out, err);
    return exit_code_for(e.kind());
  }
}

int verify_json(const std::string& report, std::ostream& out, std::ostream& err) {
  json j;
  try {
    j = json::parse(report);
  } catch (const json::exception& e) {
    err << "error: ParseError: " << e.what() << "\n";
    return kExitInput;
  }
  if (!j.contains("field") || !j.contains("element") || !j.contains("summands")) {
    err << "error: ParseError: report needs field, element and summands\n";
    return kExitInput;
  }
  return verify(j["field"].get<std::string>(), j["element"].get<std::string>(),
                j["summands"].get<std::vector<std::string>>(), out, err);
}

}  // namespace nfsos
