#include "liftcat/models/ssmat_format.hpp"

#include "liftcat/algebra/pcm_format.hpp"
#include "liftcat/error.hpp"

namespace liftcat {

Rational parse_unit_scalar(const std::string& s) {
  Rational r = parse_rational(s);
  if (r < 0 || r > 1) throw FormatError("scalar out of [0,1]: " + s);
  return r;
}

std::uint8_t parse_scalar(const BooleanMonoid& m, const std::string& s) { return m.from_rational(parse_unit_scalar(s)); }

Rational parse_scalar(const RationalMonoid&, const std::string& s) { return parse_unit_scalar(s); }

Pair parse_scalar(const PairMonoid&, const std::string& s) {
  auto c = s.find(';');
  if (c == std::string::npos) throw FormatError("pair scalar needs 'a;b', got '" + s + "'");
  return {parse_unit_scalar(s.substr(0, c)), parse_unit_scalar(s.substr(c + 1))};
}

std::string write_scalar(const BooleanMonoid&, std::uint8_t v) { return v ? "1" : "0"; }
std::string write_scalar(const RationalMonoid&, const Rational& v) { return to_string(v); }
std::string write_scalar(const PairMonoid&, const Pair& v) { return to_string(v.a) + ";" + to_string(v.b); }

SsmatFile parse_ssmat(const std::string& text) {
  auto lines = clean_lines(text);
  if (lines.empty() || lines[0].text != "ssmat v1")
    throw FormatError("expected header 'ssmat v1'", lines.empty() ? 1 : lines[0].number);
  SsmatFile f;
  bool shape = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& [no, t] = lines[i];
    auto c = t.find(':');
    if (c != std::string::npos) {
      std::string key = trim(t.substr(0, c)), val = trim(t.substr(c + 1));
      auto w = split_ws(val);
      if (key == "monoid") {
        if (val != "boolean" && val != "rational" && val != "pair") throw FormatError("unknown monoid '" + val + "'", no);
        f.monoid = val;
      } else if (key == "shape") {
        if (w.size() != 2) throw FormatError("shape needs |Y| |X|", no);
        try {
          f.rows = std::stoul(w[0]);
          f.cols = std::stoul(w[1]);
        } catch (const std::exception&) {
          throw FormatError("bad shape '" + val + "'", no);
        }
        shape = true;
      } else if (key == "denom-hint") {
        try {
          f.denom_hint = std::stol(val);
        } catch (const std::exception&) {
          throw FormatError("bad denom-hint '" + val + "'", no);
        }
        if (*f.denom_hint <= 0) throw FormatError("denom-hint must be positive", no);
      } else {
        throw FormatError("unknown key '" + key + "'", no);
      }
      continue;
    }
    if (!shape) throw FormatError("entries before shape", no);
    auto w = split_ws(t);
    if (w.size() != f.rows)
      throw FormatError("column has " + std::to_string(w.size()) + " entries, expected " + std::to_string(f.rows), no);
    f.columns.push_back(std::move(w));
    f.lines.push_back(no);
  }
  if (!shape) throw FormatError("missing shape");
  if (f.columns.size() != f.cols)
    throw FormatError("expected " + std::to_string(f.cols) + " columns, got " + std::to_string(f.columns.size()));
  return f;
}

std::string serialize_ssmat(const SsmatFile& f) {
  std::string s = "ssmat v1\nmonoid: " + f.monoid + "\nshape: " + std::to_string(f.rows) + " " +
                  std::to_string(f.cols) + "\n";
  if (f.denom_hint) s += "denom-hint: " + std::to_string(*f.denom_hint) + "\n";
  for (const auto& c : f.columns) {
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + c[i];
    s += "\n";
  }
  return s;
}

namespace {

template <class M>
Report check_columns(const M& m, const SsmatFile& f) {
  Report r("ssmat");
  auto a = ssmat_matrix(m, f);
  for (std::size_t x = 0; x < a.cols; ++x) {
    r.count();
    if (!ss_column_total(m, a, x))
      r.fail("ssmat.column-total", {"x=" + std::to_string(x), "line " + std::to_string(f.lines.at(x))}, "total <= 1",
             "undefined");
  }
  return r;
}

}  // namespace

Report check_ssmat(const SsmatFile& f) {
  Report r;
  if (f.monoid == "boolean")
    r = check_columns(BooleanMonoid{}, f);
  else if (f.monoid == "pair")
    r = check_columns(PairMonoid{}, f);
  else
    r = check_columns(RationalMonoid{}, f);
  if (f.denom_hint && f.monoid == "rational") {
    Report d("denominators");
    for (std::size_t x = 0; x < f.cols; ++x)
      for (const auto& e : f.columns[x]) {
        d.count();
        Rational q = parse_unit_scalar(e);
        if (*f.denom_hint % boost::multiprecision::denominator(q) != 0)
          d.fail("ssmat.denom-hint", {e}, "denominator divides " + std::to_string(*f.denom_hint), to_string(q));
      }
    r.add(std::move(d));
  }
  return r;
}

}  // namespace liftcat
