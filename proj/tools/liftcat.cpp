#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liftcat/algebra/division.hpp"
#include "liftcat/algebra/laws.hpp"
#include "liftcat/algebra/pcm_format.hpp"
#include "liftcat/effectus/effectus.hpp"
#include "liftcat/fincat/format.hpp"
#include "liftcat/fincat/universal.hpp"
#include "liftcat/finpac/finpac.hpp"
#include "liftcat/models/monoids.hpp"
#include "liftcat/models/sets.hpp"
#include "liftcat/models/ssmat_format.hpp"
#include "liftcat/models/substochastic.hpp"
#include "liftcat/triangle/convex.hpp"
#include "liftcat/triangle/formal_sum.hpp"
#include "liftcat/triangle/ss_triangle.hpp"
#include "liftcat/triangle/triangle.hpp"

using namespace liftcat;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Global {
  std::string format = "text";
  std::uint64_t seed = 7;
  std::size_t cap = kDefaultCap;
  bool serial = false;
  Exec ex() const { return serial ? Exec::serial : Exec::parallel; }
};

int emit(const Report& r, const Global& g) {
  std::cout << (g.format == "json" ? r.to_json() : r.to_text());
  return r.failed() ? 1 : 0;
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  for (auto v : parse_sizes(s)) {
    if (v == 0) throw InputError("denominators must be positive");
    out.push_back(static_cast<int>(v));
  }
  if (out.empty()) throw InputError("empty list '" + s + "'");
  return out;
}

ParsedModel load(const std::string& file, const std::string& unit, const Global& g) {
  ParsedModel pm = load_fincat(file, g.cap);
  if (!unit.empty()) pm.cat.set_unit(pm.cat.obj(unit));
  return pm;
}

// Same category with some objects renamed.
FinCategory rename_objects(const FinCategory& c, const std::map<std::string, std::string>& names) {
  FinCategory::Builder b;
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    auto it = names.find(c.obj_name(x));
    b.add_object(it == names.end() ? c.obj_name(x) : it->second);
  }
  for (ArrId a = 0; a < c.num_arrows(); ++a) b.add_arrow(c.arr_name(a), c.dom(a), c.cod(a));
  for (ObjId x = 0; x < c.num_objects(); ++x) b.set_identity(x, c.id(x));
  b.compose_with([&](ArrId g, ArrId f) { return c.compose(g, f); });
  for (const auto& w : c.coproducts()) b.add_coproduct(w);
  if (auto t = c.final_object()) b.set_final(*t);
  if (auto t = c.initial_object()) b.set_initial(*t);
  if (auto u = c.unit_object()) {
    b.set_unit(*u);
    if (c.tops().size() == c.num_objects())
      for (ObjId x = 0; x < c.num_objects(); ++x)
        if (c.tops()[x] != kNoArrow) b.set_top(x, c.tops()[x]);
  }
  return b.build();
}

Report check_file(const std::string& kind, const std::string& file, const std::string& unit,
                  const std::string& level, const Global& g) {
  if (kind == "pcm") {
    PcmTable t = parse_pcm(read_file(file));
    Level lvl = Level::pcm;
    if (!level.empty())
      lvl = parse_level(level);
    else if (t.one() && t.has_mul())
      lvl = Level::emonoid;
    else if (t.one())
      lvl = Level::ea;
    TableAlgebra a(t);
    return check_laws(a, lvl, Sampling<Elem>::exhaustive(a.elements()));
  }
  if (kind == "ssmat") return check_ssmat(parse_ssmat(read_file(file)));

  ParsedModel pm = load(file, unit, g);
  if (kind == "category") {
    Report r("check-category");
    r.add(check_category(pm.cat, g.ex()));
    r.add(verify_annotations(pm.cat, g.ex()));
    return r;
  }
  if (kind == "effectus") return check_effectus(pm.cat, g.ex());
  if (kind == "fpe") return check_fpe(fpe_from_parsed(pm, g.ex()), g.ex());
  // finpac
  auto cat = std::make_shared<const FinCategory>(std::move(pm.cat));
  Report r("check-finpac");
  r.add(check_characterization(cat, g.ex()));
  if (!pm.homs.empty()) {
    FinPacStructure given = with_tables(cat, pm.homs);
    Report t("given-tables");
    t.add(check_hom_pcms(given));
    t.add(check_finpac_axioms(given, g.ex()));
    Derivation d = try_derive_enrichment(cat, g.ex());
    if (d.pac)
      t.add(compare_enrichments(*d.pac, given));
    else
      t.not_checkable("no derived enrichment to compare");
    r.add(std::move(t));
  }
  return r;
}

Report reverify(const std::string& kind, const std::string& text, const Global& g) {
  ParsedModel pm = parse_fincat(text, g.cap);
  if (kind == "fpe") return check_fpe(fpe_from_parsed(pm, g.ex()), g.ex());
  return check_effectus(pm.cat, g.ex());
}

int construct_model(Report& r, ParsedModel pm, const std::string& kind, const std::string& out,
                    std::string side, const Global& g) {
  if (kind == "kleisli") {
    Report pre = check_effectus(pm.cat, g.ex());
    bool ok = !pre.failed();
    r.add(std::move(pre));
    if (!ok) return emit(r, g);
    auto cat = std::make_shared<const FinCategory>(std::move(pm.cat));
    KleisliModel kl = kleisli_lift(effectus_model(cat), g.ex());
    std::string text = serialize_fincat(kl.cat(), kl.fpe.hom_pcms());
    write_file(out, text);
    r.note("objects=" + std::to_string(kl.cat().num_objects()));
    r.note("arrows=" + std::to_string(kl.cat().num_arrows()));
    r.add(std::move(kl.derivation));
    r.add(reverify("fpe", text, g));
    return emit(r, g);
  }
  if (kind == "tot") {
    FpeModel c = fpe_from_parsed(pm, g.ex());
    Report pre = check_fpe(c, g.ex());
    bool ok = !pre.failed();
    r.add(std::move(pre));
    if (!ok) return emit(r, g);
    Subcategory t = tot_subcategory(c);
    std::string text = serialize_fincat(t.cat);
    write_file(out, text);
    r.note("objects=" + std::to_string(t.cat.num_objects()));
    r.note("arrows=" + std::to_string(t.cat.num_arrows()));
    r.add(reverify("effectus", text, g));
    return emit(r, g);
  }
  // roundtrip
  if (side.empty()) side = pm.cat.unit_object() ? "c" : "b";
  std::string table = "roundtrip v1\nside: " + side + "\n";
  if (side == "b") {
    auto cat = std::make_shared<const FinCategory>(std::move(pm.cat));
    RoundTripB rb = roundtrip_b(effectus_model(cat), g.ex());
    const FinCategory &d = rb.domain.cat, &t = rb.tot.cat;
    table += "entries: " + std::to_string(d.num_arrows()) + "\n";
    for (ArrId a = 0; a < d.num_arrows(); ++a)
      table += "phi: " + d.arr_name(a) + " = " + t.arr_name(rb.phi.arr[a]) + "\n";
    r.note("entries=" + std::to_string(d.num_arrows()));
    r.add(std::move(rb.report));
    r.add(check_roundtrip_coherence(rb, g.ex()));
  } else {
    FpeModel c = fpe_from_parsed(pm, g.ex());
    RoundTripC rc = roundtrip_c(c, g.ex());
    const FinCategory &k = rc.kl.cat(), &im = rc.image.cat;
    table += "entries: " + std::to_string(k.num_arrows()) + "\n";
    for (ArrId a = 0; a < k.num_arrows(); ++a)
      table += "psi: " + k.arr_name(a) + " = " + im.arr_name(rc.psi.arr[a]) + "\n";
    r.note("entries=" + std::to_string(k.num_arrows()));
    r.add(std::move(rc.report));
  }
  write_file(out, table);
  return emit(r, g);
}

int construct(const std::string& kind, const std::string& file, const std::string& out,
              const std::string& unit, const std::string& side, const Global& g) {
  ParsedModel pm = load(file, unit, g);
  Report r("construct-" + kind);
  try {
    return construct_model(r, std::move(pm), kind, out, side, g);
  } catch (const StructureError& e) {
    r.fail("construct.failed", {file}, "a constructed model", e.what());
  } catch (const PreconditionError& e) {
    r.fail("construct.failed", {file}, "a constructed model", e.what());
  }
  return emit(r, g);
}

struct DemoOpts {
  std::string sizes = "0,1,2";
  std::string denoms = "2,3,4,6";
  std::string monoid = "rational";
  std::string sum;
  std::uint64_t samples = 1000;
  std::size_t max_size = 3;
};

Report demo_pfn(const DemoOpts& o, const Global& g) {
  const Exec ex = g.ex();
  auto sizes = parse_sizes(o.sizes);
  Report r("demo-pfn");
  // FinSet also needs X + 1 for every X
  std::vector<std::uint32_t> fsizes = sizes;
  for (auto n : sizes)
    if (std::find(fsizes.begin(), fsizes.end(), n + 1) == fsizes.end()) fsizes.push_back(n + 1);
  std::sort(fsizes.begin(), fsizes.end());
  auto fs = build_finset(fsizes, g.cap);
  auto pfn = build_pfn(sizes, g.cap);
  r.note("finset-arrows=" + std::to_string(fs.cat->num_arrows()));
  r.note("pfn-arrows=" + std::to_string(pfn.cat->num_arrows()));
  r.add(check_effectus(*fs.cat, ex));
  auto b = effectus_model(fs.cat);
  KleisliModel kl = kleisli_lift(b, ex);
  r.note("kleisli-arrows=" + std::to_string(kl.cat().num_arrows()));
  r.add(check_characterization(kl.fpe.cat_ptr(), ex));
  r.add(check_fpe(kl.fpe, ex));
  r.add(check_kleisli_basics(kl, ex));
  FpeModel pf = pfn_fpe(pfn, ex);
  r.add(check_fpe(pf, ex));
  r.add(check_pfn_sum_oracle(pfn, pf.pac()));
  r.add(check_kleisli_pfn_iso(kl, fs, pfn, pf, ex));
  r.add(check_boolean_matrix_iso(pfn, pf));
  r.add(check_deterministic_embedding(fs));
  RoundTripB rb = roundtrip_b(b, ex);
  r.add(check_roundtrip_coherence(rb, ex));
  r.add(std::move(rb.report));
  r.add(roundtrip_c(pf, ex).report);
  r.add(check_triangle(pf, ex));
  return r;
}

SsSampler sampler(const DemoOpts& o) {
  SsSampler s;
  s.denoms = o.monoid == "boolean" ? std::vector<int>{1} : parse_ints(o.denoms);
  s.max_size = o.max_size;
  return s;
}

template <class M>
Report division_demo(const M& m, const DemoOpts& o, const Global& g) {
  auto denoms = parse_ints(o.denoms);
  return check_division_laws<M>(m, g.seed, o.samples, [&](std::mt19937_64& r) {
    return m.from_rational(draw_unit(r, denoms));
  });
}

// Pair quotients are searched on the grid; t = (0,1) has a free first component.
Report pair_division_probe(const PairMonoid& m) {
  Report r("division");
  const Pair s{0, Rational(1, 2)}, t{0, 1};
  r.count();
  try {
    Pair q = em_div(m, s, t);
    r.note("unique quotient " + m.show(q));
  } catch (const DivisionFailure& e) {
    std::string all;
    for (const auto& w : e.witnesses()) all += (all.empty() ? "" : " ") + w;
    r.fail("div.unique", {m.show(s), m.show(t)}, "1 quotient",
           std::to_string(e.witnesses().size()) + " quotients: " + all);
  }
  return r;
}

Report demo_substochastic(const DemoOpts& o, const Global& g) {
  Report r("demo-substochastic", Mode::sampling(g.seed, o.samples));
  r.note("monoid=" + o.monoid);
  const SsSampler smp = sampler(o);
  auto run = [&](const auto& m) {
    r.add(check_substochastic(m, g.seed, o.samples, smp));
    r.add(check_ss_triangle(m, g.seed, o.samples, smp));
  };
  if (o.monoid == "rational") {
    RationalMonoid m;
    run(m);
    r.add(division_demo(m, o, g));
  } else if (o.monoid == "boolean") {
    BooleanMonoid m;
    run(m);
  } else {
    PairMonoid m;
    run(m);
    r.add(pair_division_probe(m));
  }
  return r;
}

template <class M>
Report eval_formal_sum(const M& m, const std::string& text) {
  Report r("formal-sum");
  auto terms = parse_formal_sum(text);
  r.note("input=" + show_formal_sum(terms));
  if constexpr (!M::has_division) {
    r.not_checkable("division unavailable");
  } else {
    using V = typename M::value_type;
    std::vector<std::string> names;
    for (const auto& t : terms)
      if (t.point && std::find(names.begin(), names.end(), *t.point) == names.end()) names.push_back(*t.point);
    LiftedConvex<M, FreeConvex<M>> lx{FreeConvex<M>{names.size()}};
    FormalSum<typename LiftedConvex<M, FreeConvex<M>>::elem, V> s;
    for (const auto& t : terms) {
      if (!t.point) {
        s.push_back({lx.bottom(m), m.from_rational(t.weight)});
        continue;
      }
      auto i = static_cast<std::size_t>(std::find(names.begin(), names.end(), *t.point) - names.begin());
      s.push_back({{lx.base.delta(m, i), m.from_rational(t.r)}, m.from_rational(t.weight)});
    }
    r.count();
    auto tr = conv_lift_sum(m, lx, s);
    std::string v = "*";
    if (!tr.value.is_bottom()) {
      v.clear();
      const auto& e = tr.value.x();
      for (std::size_t j = 0; j < names.size(); ++j) {
        if (e[j] == m.zero()) continue;
        v += (v.empty() ? "" : " + ") + m.show(e[j]) + "|" + names[j] + ">";
      }
    }
    r.note("result=(" + v + ", " + m.show(tr.t) + ")");
    if (tr.inner_total) r.note("inner-total=" + m.show(*tr.inner_total));
  }
  return r;
}

Report demo_convex(const DemoOpts& o, const Global& g) {
  Report r("demo-convex", Mode::sampling(g.seed, o.samples));
  r.note("monoid=" + o.monoid);
  const SsSampler smp = sampler(o);
  auto run = [&](const auto& m) {
    r.add(check_convex(m, g.seed, o.samples, smp));
    if (!o.sum.empty()) r.add(eval_formal_sum(m, o.sum));
  };
  if (o.monoid == "rational")
    run(RationalMonoid{});
  else if (o.monoid == "boolean")
    run(BooleanMonoid{});
  else
    run(PairMonoid{});
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"liftcat: finite effectus and FinPAC checker"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "text or json")
      ->envname("LIFTCAT_FORMAT")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "sampling seed")->envname("LIFTCAT_SEED");
  app.add_option("--cap", g.cap, "exhaustive size cap")->envname("LIFTCAT_CAP");
  app.add_flag("--serial", g.serial, "serial kernels");

  std::string kind, file, out, unit, level, side;
  auto* check = app.add_subcommand("check", "run a checker suite on a file")->fallthrough();
  check->add_option("kind", kind)->required()->check(
      CLI::IsMember({"pcm", "category", "effectus", "fpe", "finpac", "ssmat"}));
  check->add_option("file", file)->required();
  check->add_option("--unit", unit, "unit object");
  check->add_option("--level", level, "pcm, gea, ea or emonoid");

  std::string ckind;
  auto* cons = app.add_subcommand("construct", "build kleisli, tot or roundtrip")->fallthrough();
  cons->add_option("kind", ckind)->required()->check(CLI::IsMember({"kleisli", "tot", "roundtrip"}));
  cons->add_option("file", file)->required();
  cons->add_option("-o,--output", out)->required();
  cons->add_option("--unit", unit, "unit object");
  cons->add_option("--side", side, "b (effectus) or c (FinPAC with effects)")->check(CLI::IsMember({"b", "c"}));

  DemoOpts d;
  std::string dname;
  auto* demo = app.add_subcommand("demo", "build a model and run its suites")->fallthrough();
  demo->add_option("name", dname)->required()->check(CLI::IsMember({"pfn", "substochastic", "convex"}));
  demo->add_option("--sizes", d.sizes, "set sizes");
  demo->add_option("--denoms", d.denoms, "sampling denominators");
  demo->add_option("--samples", d.samples, "sample count");
  demo->add_option("--max-size", d.max_size, "largest sampled set");
  demo->add_option("--monoid", d.monoid)->check(CLI::IsMember({"rational", "boolean", "pair"}));
  demo->add_option("--sum", d.sum, "formal sum such as '1/2|x@1/2> + 1/2|*>'");

  std::string mkind;
  std::vector<std::string> renames;
  auto* model = app.add_subcommand("model", "write FinSet or Pfn as fincat")->fallthrough();
  model->add_option("kind", mkind)->required()->check(CLI::IsMember({"finset", "pfn"}));
  model->add_option("--sizes", d.sizes, "set sizes");
  model->add_option("--name", renames, "rename an object, old=new");
  model->add_option("-o,--output", out);

  app.add_subcommand("version", "print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*check) return emit(check_file(kind, file, unit, level, g), g);
    if (*cons) return construct(ckind, file, out, unit, side, g);
    if (*demo) {
      if (dname == "pfn") return emit(demo_pfn(d, g), g);
      if (dname == "substochastic") return emit(demo_substochastic(d, g), g);
      return emit(demo_convex(d, g), g);
    }
    if (*model) {
      auto sizes = parse_sizes(d.sizes);
      FunctionModel m = mkind == "pfn" ? build_pfn(sizes, g.cap) : build_finset(sizes, g.cap);
      std::map<std::string, std::string> names;
      for (const auto& s : renames) {
        auto eq = s.find('=');
        if (eq == std::string::npos) throw InputError("expected old=new, got '" + s + "'");
        names[s.substr(0, eq)] = s.substr(eq + 1);
      }
      std::string text = serialize_fincat(names.empty() ? *m.cat : rename_objects(*m.cat, names));
      if (out.empty())
        std::cout << text;
      else
        write_file(out, text);
      return 0;
    }
    std::cout << "liftcat " << kVersion << "\n";
    return 0;
  } catch (const StructureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& w : e.witnesses()) std::cerr << "  witness: " << w << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    for (const auto& w : e.witnesses()) std::cerr << "  witness: " << w << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
