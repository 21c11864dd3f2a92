#include "liftcat/fincat/format.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "liftcat/algebra/pcm_format.hpp"
#include "liftcat/error.hpp"

namespace liftcat {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

namespace {

std::pair<std::string, std::string> directive(const std::string& s) {
  auto c = s.find(':');
  if (c == std::string::npos) return {"", s};
  return {trim(s.substr(0, c)), trim(s.substr(c + 1))};
}

struct HomBlock {
  std::size_t line;
  std::string x, y;
  std::vector<NumberedLine> body;
};

}  // namespace

ParsedModel parse_fincat(const std::string& text, std::size_t cap) {
  auto lines = clean_lines(text);
  if (lines.empty() || lines.front().text != "fincat v1")
    throw FormatError("expected header 'fincat v1'", lines.empty() ? 0 : lines.front().number);
  std::vector<NumberedLine> objects, arrows, ids, comps, cops, finals, initials, units, tops;
  std::vector<HomBlock> blocks;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& l = lines[i];
    auto [key, rest] = directive(l.text);
    if (!blocks.empty()) {
      if (key == "hom") {
        auto w = split_ws(rest);
        if (w.size() != 2) throw FormatError("expected 'hom: X Y'", l.number);
        blocks.push_back({l.number, w[0], w[1], {}});
      } else {
        blocks.back().body.push_back(l);
      }
      continue;
    }
    NumberedLine v{l.number, rest};
    if (key == "objects") objects.push_back(v);
    else if (key == "arrows" || key == "arrow") arrows.push_back(v);
    else if (key == "id") ids.push_back(v);
    else if (key == "compose") comps.push_back(v);
    else if (key == "coproduct") cops.push_back(v);
    else if (key == "final") finals.push_back(v);
    else if (key == "initial") initials.push_back(v);
    else if (key == "unit") units.push_back(v);
    else if (key == "top") tops.push_back(v);
    else if (key == "hom") {
      auto w = split_ws(rest);
      if (w.size() != 2) throw FormatError("expected 'hom: X Y'", l.number);
      blocks.push_back({l.number, w[0], w[1], {}});
    } else {
      throw FormatError("unknown directive '" + (key.empty() ? l.text : key) + "'", l.number);
    }
  }
  FinCategory::Builder b(cap);
  for (const auto& o : objects) {
    for (const auto& n : split_ws(o.text)) {
      try {
        b.add_object(n);
      } catch (const FormatError& e) {
        throw FormatError(e.what(), o.number);
      }
    }
  }
  if (b.num_objects() == 0) throw FormatError("empty objects list", objects.empty() ? 0 : objects.front().number);
  auto obj = [&](const std::string& n, std::size_t line) {
    auto o = b.find_obj(n);
    if (!o) throw FormatError("unknown object '" + n + "'", line);
    return *o;
  };
  auto arr = [&](const std::string& n, std::size_t line) {
    auto a = b.find_arr(n);
    if (!a) throw FormatError("unknown arrow '" + n + "'", line);
    return *a;
  };
  for (const auto& a : arrows) {
    auto w = split_ws(a.text);
    if (w.size() != 3) throw FormatError("expected 'arrow: name dom cod'", a.number);
    try {
      b.add_arrow(w[0], obj(w[1], a.number), obj(w[2], a.number));
    } catch (const FormatError& e) {
      throw FormatError(e.what(), a.number);
    }
  }
  auto eq_pair = [](const std::string& s, std::size_t line) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw FormatError("expected '='", line);
    return std::make_pair(trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
  };
  for (const auto& i : ids) {
    auto [x, a] = eq_pair(i.text, i.number);
    try {
      b.set_identity(obj(x, i.number), arr(a, i.number));
    } catch (const FormatError& e) {
      if (e.line()) throw;
      throw FormatError(e.what(), i.number);
    }
  }
  for (const auto& c : comps) {
    auto w = split_ws(c.text);
    if (w.size() != 5 || w[1] != "." || w[3] != "=")
      throw FormatError("expected 'compose: g . f = h'", c.number);
    b.set_compose(arr(w[0], c.number), arr(w[2], c.number), arr(w[4], c.number), c.number);
  }
  for (const auto& c : cops) {
    auto w = split_ws(c.text);
    if (w.size() != 8 || w[1] != "+" || w[3] != "=" || w[5] != "via")
      throw FormatError("expected 'coproduct: X + Y = A via k1 k2'", c.number);
    Coproduct cp{obj(w[0], c.number), obj(w[2], c.number), obj(w[4], c.number), arr(w[6], c.number),
                 arr(w[7], c.number)};
    if (b.dom(cp.k1) != cp.left || b.cod(cp.k1) != cp.apex || b.dom(cp.k2) != cp.right ||
        b.cod(cp.k2) != cp.apex)
      throw FormatError("ill-typed coprojections", c.number);
    b.add_coproduct(cp);
  }
  auto single = [&](const std::vector<NumberedLine>& v, const char* what) -> std::optional<ObjId> {
    if (v.empty()) return std::nullopt;
    if (v.size() > 1) throw FormatError(std::string("duplicate ") + what + " line", v[1].number);
    return obj(v[0].text, v[0].number);
  };
  if (auto t = single(finals, "final")) b.set_final(*t);
  if (auto t = single(initials, "initial")) b.set_initial(*t);
  if (auto t = single(units, "unit")) b.set_unit(*t);
  for (const auto& t : tops) {
    if (units.empty()) throw FormatError("top given without unit", t.number);
    auto [x, a] = eq_pair(t.text, t.number);
    ObjId xo = obj(x, t.number);
    ArrId ao = arr(a, t.number);
    if (b.dom(ao) != xo || b.cod(ao) != obj(units[0].text, units[0].number))
      throw FormatError("top '" + a + "' is not an arrow " + x + " -> unit", t.number);
    b.set_top(xo, ao);
  }
  ParsedModel m{b.build(), {}};
  const FinCategory& c = m.cat;
  std::set<std::pair<ObjId, ObjId>> seen;
  for (const auto& blk : blocks) {
    auto built_obj = [&](const std::string& n) {
      auto o = c.find_obj(n);
      if (!o) throw FormatError("unknown object '" + n + "'", blk.line);
      return *o;
    };
    ObjId x = built_obj(blk.x), y = built_obj(blk.y);
    if (!seen.insert({x, y}).second) throw FormatError("duplicate hom block", blk.line);
    if (blk.body.empty() || blk.body.front().text != "pcm v1")
      throw FormatError("hom block must start with 'pcm v1'", blk.line);
    std::vector<NumberedLine> body(blk.body.begin() + 1, blk.body.end());
    PcmTable t = parse_pcm_body(body);
    const auto& h = c.hom(x, y);
    if (t.size() != h.size())
      throw FormatError("hom block elements differ from the arrows " + blk.x + " -> " + blk.y, blk.line);
    std::vector<std::string> names;
    for (ArrId a : h) names.push_back(c.arr_name(a));
    PcmTable local(names, 0);
    auto to_local = [&](Elem e) {
      auto a = c.find_arr(t.name(e));
      if (!a || c.dom(*a) != x || c.cod(*a) != y)
        throw FormatError("hom block element '" + t.name(e) + "' is not an arrow " + blk.x + " -> " + blk.y,
                          blk.line);
      return static_cast<Elem>(c.local(*a));
    };
    local.set_zero(to_local(t.zero()));
    if (t.one()) local.set_one(to_local(*t.one()));
    for (Elem a = 0; a < t.size(); ++a)
      for (Elem bb = 0; bb < t.size(); ++bb)
        if (auto s = t.sum(a, bb)) local.set_sum_one_sided(to_local(a), to_local(bb), to_local(*s));
    m.homs.push_back({x, y, std::move(local)});
  }
  return m;
}

ParsedModel load_fincat(const std::string& path, std::size_t cap) {
  return parse_fincat(read_file(path), cap);
}

std::string serialize_fincat(const FinCategory& c, const std::vector<HomPcm>& homs) {
  std::ostringstream o;
  o << "fincat v1\nobjects:";
  for (const auto& n : c.obj_names()) o << ' ' << n;
  o << '\n';
  for (ArrId a = 0; a < c.num_arrows(); ++a)
    o << "arrow: " << c.arr_name(a) << ' ' << c.obj_name(c.dom(a)) << ' ' << c.obj_name(c.cod(a)) << '\n';
  for (ObjId x = 0; x < c.num_objects(); ++x)
    o << "id: " << c.obj_name(x) << " = " << c.arr_name(c.id(x)) << '\n';
  const auto n = c.num_objects();
  for (ObjId x = 0; x < n; ++x)
    for (ObjId y = 0; y < n; ++y)
      for (ArrId f : c.hom(x, y)) {
        if (f == c.id(x)) continue;
        for (ObjId z = 0; z < n; ++z)
          for (ArrId g : c.hom(y, z)) {
            if (g == c.id(y)) continue;
            o << "compose: " << c.arr_name(g) << " . " << c.arr_name(f) << " = "
              << c.arr_name(c.compose(g, f)) << '\n';
          }
      }
  for (const auto& w : c.coproducts())
    o << "coproduct: " << c.obj_name(w.left) << " + " << c.obj_name(w.right) << " = "
      << c.obj_name(w.apex) << " via " << c.arr_name(w.k1) << ' ' << c.arr_name(w.k2) << '\n';
  if (auto t = c.final_object()) o << "final: " << c.obj_name(*t) << '\n';
  if (auto t = c.initial_object()) o << "initial: " << c.obj_name(*t) << '\n';
  if (auto u = c.unit_object()) {
    o << "unit: " << c.obj_name(*u) << '\n';
    if (c.tops().size() == n)
      for (ObjId x = 0; x < n; ++x)
        if (c.tops()[x] != kNoArrow) o << "top: " << c.obj_name(x) << " = " << c.arr_name(c.tops()[x]) << '\n';
  }
  for (const auto& h : homs) {
    o << "hom: " << c.obj_name(h.x) << ' ' << c.obj_name(h.y) << '\n';
    o << serialize_pcm(h.table);
  }
  return o.str();
}

}  // namespace liftcat
