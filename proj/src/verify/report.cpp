#include <charconv>
#include <cmath>
#include <string>

#include "qbessel/verify.hpp"

namespace qb::verify {

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string json_number(double v, int precision) {
  if (!std::isfinite(v)) return "null";
  return format_number(v, precision);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "NaN";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

void write_report_header(std::ostream& out, Format format) {
  if (format == Format::CSV) {
    out << "identity_id,params,re_lhs,im_lhs,re_rhs,im_rhs,abs_err,rel_err,pass,note\n";
  }
}

void write_report(std::ostream& out, const IdentityReport& r, Format format, int precision) {
  if (format == Format::CSV) {
    std::string params;
    for (const auto& [k, v] : r.params) {
      if (!params.empty()) params += ';';
      params += k + "=" + format_number(v, precision);
    }
    out << r.identity_id << ',' << params << ',' << format_number(r.lhs.real(), precision) << ','
        << format_number(r.lhs.imag(), precision) << ','
        << format_number(r.rhs.real(), precision) << ','
        << format_number(r.rhs.imag(), precision) << ',' << format_number(r.abs_err, precision)
        << ',' << format_number(r.rel_err, precision) << ',' << (r.pass ? "true" : "false")
        << ',' << csv_field(r.note) << '\n';
    return;
  }
  out << "{\"identity_id\":\"" << escape_json(r.identity_id) << "\",\"params\":{";
  bool first = true;
  for (const auto& [k, v] : r.params) {
    if (!first) out << ',';
    first = false;
    out << '"' << k << "\":" << json_number(v, precision);
  }
  out << "},\"lhs\":[" << json_number(r.lhs.real(), precision) << ','
      << json_number(r.lhs.imag(), precision) << "],\"rhs\":["
      << json_number(r.rhs.real(), precision) << ',' << json_number(r.rhs.imag(), precision)
      << "],\"abs_err\":" << json_number(r.abs_err, precision)
      << ",\"rel_err\":" << json_number(r.rel_err, precision)
      << ",\"pass\":" << (r.pass ? "true" : "false") << ",\"note\":\"" << escape_json(r.note)
      << "\"}\n";
}

void write_summary(std::ostream& out, std::size_t total, std::size_t passed, Format format) {
  const std::size_t failed = total - passed;
  if (format == Format::CSV) {
    out << "summary," << total << ',' << passed << ',' << failed << '\n';
  } else {
    out << "{\"summary\":{\"total\":" << total << ",\"passed\":" << passed
        << ",\"failed\":" << failed << "}}\n";
  }
}

}  // namespace qb::verify
