#include "liftcat/algebra/pcm_format.hpp"

#include <sstream>

#include "liftcat/error.hpp"

namespace liftcat {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::vector<NumberedLine> clean_lines(const std::string& text) {
  std::vector<NumberedLine> out;
  std::istringstream in(text);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto h = line.find('#');
    if (h != std::string::npos) line.resize(h);
    line = trim(line);
    if (!line.empty()) out.push_back({n, line});
  }
  return out;
}

static std::pair<std::string, std::string> directive(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) return {"", s};
  return {trim(s.substr(0, c)), trim(s.substr(c + 1))};
}

PcmTable parse_pcm_body(const std::vector<NumberedLine>& lines) {
  std::optional<PcmTable> t;
  std::optional<std::string> zero, one;
  std::size_t zero_line = 0, one_line = 0;
  struct Eqn {
    std::size_t line;
    char op;
    std::string a, b, c;
  };
  std::vector<Eqn> eqs;
  for (const auto& [no, text] : lines) {
    auto w = split_ws(text);
    if (w.size() == 5 && (w[1] == "+" || w[1] == "*") && w[3] == "=") {
      eqs.push_back({no, w[1][0], w[0], w[2], w[4]});
      continue;
    }
    auto [key, rest] = directive(text);
    if (key == "elements") {
      if (t) throw FormatError("duplicate elements line", no);
      auto names = split_ws(rest);
      if (names.empty()) throw FormatError("empty elements list", no);
      try {
        t.emplace(names, 0);
      } catch (const InputError& e) {
        throw FormatError(e.what(), no);
      }
    } else if (key == "zero") {
      if (zero) throw FormatError("duplicate zero line", no);
      zero = rest;
      zero_line = no;
    } else if (key == "one") {
      if (one) throw FormatError("duplicate one line", no);
      one = rest;
      one_line = no;
    } else if (key.empty()) {
      throw FormatError("expected 'a + b = c' or 'a * b = c'", no);
    } else {
      throw FormatError("unknown directive '" + key + "'", no);
    }
  }
  if (!t) throw FormatError("missing elements line");
  if (!zero) throw FormatError("missing zero line");
  auto get = [&](const std::string& n, std::size_t no) {
    try {
      return t->elem(n);
    } catch (const InputError&) {
      throw FormatError("unknown element '" + n + "'", no);
    }
  };
  t->set_zero(get(*zero, zero_line));
  if (one) t->set_one(get(*one, one_line));
  t->add_unit_sums();
  std::vector<std::optional<Elem>> mul(t->size() * t->size());
  bool has_mul = false;
  for (const auto& e : eqs) {
    Elem a = get(e.a, e.line), b = get(e.b, e.line), c = get(e.c, e.line);
    if (e.op == '+') {
      auto prev_ab = t->sum(a, b), prev_ba = t->sum(b, a);
      if ((prev_ab && *prev_ab != c) || (prev_ba && *prev_ba != c))
        throw FormatError("contradictory sum for " + e.a + " + " + e.b, e.line);
      t->set_sum(a, b, c);
    } else {
      auto& slot = mul[a * t->size() + b];
      if (slot && *slot != c) throw FormatError("contradictory product for " + e.a + " * " + e.b, e.line);
      slot = c;
      has_mul = true;
    }
  }
  if (has_mul) {
    t->enable_mul(t->zero());
    for (Elem a = 0; a < t->size(); ++a)
      for (Elem b = 0; b < t->size(); ++b)
        if (auto c = mul[a * t->size() + b]) t->set_mul(a, b, *c);
  }
  return *t;
}

PcmTable parse_pcm(const std::string& text) {
  auto lines = clean_lines(text);
  if (lines.empty() || lines.front().text != "pcm v1")
    throw FormatError("expected header 'pcm v1'", lines.empty() ? 0 : lines.front().number);
  lines.erase(lines.begin());
  return parse_pcm_body(lines);
}

std::string serialize_pcm(const PcmTable& t) {
  std::string out = "pcm v1\nelements:";
  for (const auto& n : t.names()) out += " " + n;
  out += "\nzero: " + t.name(t.zero()) + "\n";
  if (t.one()) out += "one: " + t.name(*t.one()) + "\n";
  for (Elem a = 0; a < t.size(); ++a) {
    for (Elem b = a; b < t.size(); ++b) {
      auto ab = t.sum(a, b), ba = t.sum(b, a);
      if (ab) out += t.name(a) + " + " + t.name(b) + " = " + t.name(*ab) + "\n";
      if (ba && b != a && ba != ab) out += t.name(b) + " + " + t.name(a) + " = " + t.name(*ba) + "\n";
    }
  }
  if (t.has_mul()) {
    for (Elem a = 0; a < t.size(); ++a)
      for (Elem b = 0; b < t.size(); ++b)
        if (t.mul(a, b) != t.zero())
          out += t.name(a) + " * " + t.name(b) + " = " + t.name(t.mul(a, b)) + "\n";
  }
  return out;
}

}  // namespace liftcat
