// repgrowth: command-line front end.
//
// Every command prints one JSON document (or CSV for `irr --format csv`).
// Exit status: 0 success, 1 a checked claim failed, 2 usage or budget error.

#include <openssl/evp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "repgrowth/cohom/cohomology.hpp"
#include "repgrowth/crowns/crowns.hpp"
#include "repgrowth/groups/construct.hpp"
#include "repgrowth/growth/growth.hpp"
#include "repgrowth/repcount/counts.hpp"
#include "repgrowth/verify/acceptance.hpp"

namespace {

using nlohmann::json;
using namespace repgrowth;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::uint64_t seed = 1;
  std::size_t cap_enum = groups::kDefaultEnumCap;
  std::size_t cap_chop = gmod::kDefaultChopCap;
  std::uint64_t budget = 100000000ull;
  std::string out;
  std::string format = "json";
  bool no_cache = false;

  json to_json() const {
    return {{"seed", seed},
            {"caps", {{"enumeration", cap_enum}, {"chop", cap_chop}, {"search", budget}}},
            {"format", format}};
  }
};

struct Result {
  std::string body;
  int status = 0;
};

json field_json(const fq::Field& F) { return {{"p", F.p()}, {"k", F.k()}, {"q", F.q()}}; }

json descriptor_json(const gmod::IrreducibleDescriptor& d) {
  json j = {{"dim", d.dim},
            {"field", field_json(d.field)},
            {"endo_degree", d.endo_degree},
            {"abs_irr", d.abs_irr},
            {"faithful", d.faithful},
            {"fingerprint", d.fingerprint}};
  if (d.central_character) j["central_character"] = *d.central_character;
  return j;
}

json group_json(const groups::GroupPtr& G) {
  return {{"label", G->label()}, {"order", G->order()}, {"classes", G->classes().size()}};
}

std::string sha256_hex(const std::string& s) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(s.data(), s.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

growth::Rational parse_rational(const std::string& s) {
  growth::Rational x;
  if (x.set_str(s, 10) != 0) throw UsageError("not a rational number: " + s);
  x.canonicalize();
  return x;
}

std::string emit(const json& j) { return j.dump(2) + "\n"; }

json rows_json(const std::vector<std::uint64_t>& v) { return json(v); }

// --- commands -------------------------------------------------------------

Result cmd_irr(const Config& c, const std::string& group, std::uint64_t q, std::size_t D) {
  auto G = groups::parse_group(group, c.cap_enum);
  auto F = fq::Field::of_order(q);
  repcount::TableOptions opts;
  opts.seed = c.seed;
  opts.cap = c.cap_chop;
  auto t = repcount::irr_table(G, F, D, opts);
  if (c.format == "csv") {
    std::ostringstream os;
    os << "n,r,r_star,R\n";
    for (std::size_t n = 1; n <= t.D; ++n) os << n << ',' << t.r[n] << ',' << t.r_star[n] << ',' << t.R[n] << '\n';
    return {os.str(), 0};
  }
  json irr = json::array();
  for (const auto& f : t.irreducibles) irr.push_back(descriptor_json(f.descriptor));
  json j = {{"group", group},  {"p", F.p()},         {"k", F.k()},         {"D", t.D},
            {"r", rows_json(t.r)}, {"r_star", rows_json(t.r_star)}, {"R", rows_json(t.R)},
            {"irreducibles", irr}, {"order", G->order()}};
  return {emit(j), 0};
}

gmod::GModule select_module(const groups::GroupPtr& G, const Config& c, const std::string& kind, std::uint64_t q,
                            unsigned deleted_p) {
  if (kind == "regular") return gmod::regular_module(G, fq::Field::of_order(q), c.cap_chop);
  if (kind == "trivial") return gmod::trivial_module(G, fq::Field::of_order(q));
  if (kind == "natural") return gmod::natural_module(G);
  if (kind == "deleted") return gmod::fully_deleted_module(G, deleted_p);
  throw UsageError("unknown module kind: " + kind);
}

Result cmd_chop(const Config& c, const std::string& group, std::uint64_t q, const std::string& kind, unsigned dp) {
  auto G = groups::parse_group(group, c.cap_enum);
  auto M = select_module(G, c, kind, q, dp);
  gmod::ChopOptions opts;
  opts.seed = c.seed;
  opts.cap = c.cap_chop;
  auto cs = gmod::chop(M, opts);
  json factors = json::array();
  for (const auto& f : cs.factors) {
    json d = descriptor_json(f.descriptor);
    d["multiplicity"] = f.multiplicity;
    factors.push_back(d);
  }
  json j = {{"group", group_json(G)}, {"module", {{"kind", kind}, {"dim", M.dim()}, {"field", field_json(M.field())}}},
            {"factors", factors}, {"total_dim", cs.total_dim()}};
  return {emit(j), 0};
}

Result cmd_cohom(const Config& c, const std::string& group, std::uint64_t q, const std::string& kind, unsigned dp,
                 bool with_ag) {
  auto G = groups::parse_group(group, c.cap_enum);
  std::vector<gmod::GModule> mods;
  if (kind == "simples") {
    gmod::ChopOptions opts;
    opts.seed = c.seed;
    opts.cap = c.cap_chop;
    for (auto& f : gmod::chop(gmod::regular_module(G, fq::Field::of_order(q), c.cap_chop), opts).factors)
      mods.push_back(f.module);
  } else {
    mods.push_back(select_module(G, c, kind, q, dp));
  }
  json rows = json::array();
  bool ok = true;
  for (const auto& M : mods) {
    auto h = cohom::h1(M);
    json row = {{"dim", M.dim()}, {"field", field_json(M.field())}, {"z1", h.z1}, {"b1", h.b1}, {"h1", h.h1}};
    if (kind == "simples") row["descriptor"] = descriptor_json(gmod::describe(M));
    if (with_ag) {
      auto ag = cohom::ag_check(M);
      row["ag"] = {{"h1_G", ag.h1_G},   {"h1_image", ag.h1_image},         {"delta", ag.delta},
                   {"endo_degree", ag.endo_degree}, {"kernel_order", ag.kernel_order}, {"holds", ag.holds()}};
      ok = ok && ag.holds();
    }
    rows.push_back(row);
  }
  json j = {{"group", group_json(G)}, {"modules", kind}, {"results", rows}};
  return {emit(j), ok ? 0 : 1};
}

Result cmd_lh1(const Config& c, const std::string& group, std::uint64_t bound) {
  auto G = groups::parse_group(group, c.cap_enum);
  auto res = cohom::lh1_search(G, bound, c.seed);
  auto cand = [](const cohom::Lh1Candidate& x) {
    return json{{"size", x.size}, {"field", field_json(x.field)}, {"dim", x.dim}, {"h1", x.h1},
                {"descriptor", descriptor_json(x.descriptor)}};
  };
  json scanned = json::array();
  for (const auto& x : res.scanned) scanned.push_back(cand(x));
  json j = {{"group", group_json(G)}, {"bound", bound}, {"scanned", scanned},
            {"lh1", res.witness ? json(res.witness->size) : json(nullptr)}};
  if (res.witness) j["witness"] = cand(*res.witness);
  return {emit(j), 0};
}

json chief_json(const crowns::ChiefSeries& cs) {
  json chain = json::array(), factors = json::array();
  for (const auto& n : cs.chain) chain.push_back(n.size());
  for (const auto& f : cs.factors) {
    json x = {{"order", f.order}, {"abelian", f.abelian}, {"frattini", f.frattini}};
    if (f.abelian) {
      x["p"] = f.p;
      x["dim"] = f.dim;
    } else {
      x["simple_order"] = f.simple_order;
      x["copies"] = f.copies;
    }
    factors.push_back(x);
  }
  return {{"chain", chain}, {"factors", factors}};
}

Result cmd_chief(const Config& c, const std::string& group, bool reverse, bool fp1) {
  auto G = groups::parse_group(group, c.cap_enum);
  json j = {{"group", group_json(G)}, {"series", chief_json(crowns::chief_series(G, reverse))}};
  if (fp1) {
    auto r = crowns::fp1_sup(G, c.seed);
    j["fp1"] = {{"value", r.value}};
    if (r.attained) {
      const auto& t = *r.attained;
      j["fp1"]["attained"] = {{"descriptor", descriptor_json(t.descriptor)}, {"delta", t.data.delta},
                              {"r", t.data.r}, {"h_prime", t.data.h_prime}, {"endo_degree", t.data.endo_degree}};
    }
  }
  return {emit(j), 0};
}

Result cmd_crown(const Config& c, const std::string& base, std::size_t k, std::size_t max_d) {
  auto B = groups::parse_group(base, c.cap_enum);
  auto L = groups::parse_group("crown " + base + " " + std::to_string(k), c.cap_enum);
  json j = {{"base", group_json(B)}, {"k", k}, {"crown", group_json(L)}};
  auto cs = crowns::chief_series(L);
  j["series"] = chief_json(cs);
  auto d = crowns::d_bruteforce(L, max_d, c.budget);
  j["d"] = d ? json(*d) : json(nullptr);
  j["max_d"] = max_d;
  return {emit(j), 0};
}

Result cmd_epi(const Config& c, const std::string& group, const std::string& target) {
  auto G = groups::parse_group(group, c.cap_enum);
  auto T = groups::parse_group(target, c.cap_enum);
  auto e = crowns::epi_census(G, T);
  json j = {{"group", group_json(G)}, {"target", group_json(T)}, {"epis", e.epis}, {"classes", e.classes},
            {"lower_holds", e.lower_holds}, {"upper_holds", e.upper_holds}};
  return {emit(j), e.lower_holds && e.upper_holds ? 0 : 1};
}

json series_json(const growth::TruncatedSeries& s) {
  json a = json::array();
  for (std::size_t n = 1; n <= s.D; ++n) a.push_back(s.a[n].get_str());
  return a;
}

Result cmd_series(const Config& c, const std::vector<std::string>& group_specs, std::uint64_t q, std::size_t D,
                  unsigned cexp) {
  auto F = fq::Field::of_order(q);
  repcount::TableOptions opts;
  opts.seed = c.seed;
  opts.cap = c.cap_chop;
  std::vector<growth::TruncatedSeries> parts;
  json factors = json::array();
  for (const auto& spec : group_specs) {
    auto G = groups::parse_group(spec, c.cap_enum);
    auto s = growth::series_from_counts(repcount::irr_table(G, F, D, opts), D);
    factors.push_back({{"group", spec}, {"coefficients", series_json(s)}});
    parts.push_back(std::move(s));
  }
  auto prod = growth::series_product(parts, D);
  json j = {{"field", field_json(F)}, {"D", D}, {"factors", factors}, {"product", series_json(prod)}};
  if (cexp > 0) {
    j["c"] = cexp;
    j["value"] = growth::str(growth::series_product_eval(parts, D, q, cexp));
  }
  return {emit(j), 0};
}

json range_json(const growth::RangeCheck& r) {
  return {{"claim", r.claim}, {"range", r.range}, {"checked", r.checked}, {"violations", r.violations},
          {"violation_count", r.violation_count}, {"holds", r.holds()}};
}

json bound_json(const growth::BoundCheck& b) {
  return {{"claim", b.claim}, {"lhs", growth::str(b.lhs)}, {"rhs", growth::str(b.rhs)}, {"holds", b.holds},
          {"applicable", b.applicable}};
}

struct CheckArgs {
  std::string name;
  unsigned p = 7, n = 2;
  std::uint64_t q = 2, m = 1, t = 1;
  std::string x = "1/2";
  unsigned c = 2;
  std::size_t count = 5;
  std::vector<std::uint64_t> qs{2, 3, 4, 5, 7};
  std::string group, group2;
  std::size_t D = 4;

  json to_json() const {
    return {{"name", name}, {"p", p}, {"n", n}, {"q", q}, {"m", m}, {"t", t}, {"x", x}, {"c", c},
            {"count", count}, {"qs", qs}, {"group", group}, {"group2", group2}, {"D", D}};
  }
};

Result cmd_check(const Config& cfg, const CheckArgs& a) {
  json j = {{"check", a.name}};
  bool ok = true;
  if (a.name == "gstar-bound") {
    auto b = growth::gstar_bound_check(a.p, a.n, a.q, parse_rational(a.x), cfg.seed);
    j["result"] = bound_json(b);
    ok = b.holds;
  } else if (a.name == "sl-bound") {
    auto b = growth::sl_bound_check(a.n, a.q, a.m, a.t, parse_rational(a.x));
    j["result"] = bound_json(b);
    ok = !b.applicable || b.holds;
  } else if (a.name == "inequalities") {
    json rows = json::array();
    for (const auto& r : growth::inequality_suite()) {
      rows.push_back(range_json(r));
      ok = ok && r.holds();
    }
    j["result"] = rows;
  } else if (a.name == "families") {
    json rows = json::array();
    for (const auto& f : {growth::sl2_family(10000), growth::alt_family(500)}) {
      auto r = growth::family_pfp1_check(f, a.c);
      json x = range_json(r);
      x["family"] = f.name;
      rows.push_back(x);
      ok = ok && r.holds();
    }
    j["c"] = a.c;
    j["result"] = rows;
  } else if (a.name == "product-bound") {
    auto rep = growth::gstar_product_bound(a.count, a.qs);
    json fam = json::array(), rows = json::array();
    for (const auto& m : rep.family) fam.push_back({{"p", m.p}, {"n", m.n}, {"eta", m.eta}});
    for (const auto& r : rep.rows) {
      json partial = json::array();
      for (const auto& v : r.partial) partial.push_back(growth::str(v));
      rows.push_back({{"q", r.q}, {"partial", partial}, {"bound", growth::str(r.bound)}, {"holds", r.holds}});
    }
    j["result"] = {{"family", fam}, {"rows", rows}, {"holds", rep.holds()}};
    ok = rep.holds();
  } else if (a.name == "convolution") {
    if (a.group.empty() || a.group2.empty()) throw UsageError("convolution needs --group and --group2");
    auto G = groups::parse_group(a.group, cfg.cap_enum);
    auto H = groups::parse_group(a.group2, cfg.cap_enum);
    auto rep = growth::convolution_identity_check(G, H, fq::Field::of_order(a.q), a.D, cfg.seed);
    j["result"] = {{"direct", rep.direct}, {"convolution", rep.convolution}, {"holds", rep.holds()}};
    ok = rep.holds();
  } else {
    throw UsageError("unknown check: " + a.name);
  }
  j["holds"] = ok;
  j["args"] = a.to_json();
  return {emit(j), ok ? 0 : 1};
}

Result cmd_verify(const Config& c, const std::string& suite, const std::vector<int>& ids) {
  std::vector<int> todo = ids.empty() ? verify::suite(suite) : ids;
  json rows = json::array();
  bool all = true;
  for (int id : todo) {
    auto o = verify::run(id, c.seed);
    rows.push_back({{"id", o.id}, {"name", o.name}, {"claim", o.claim}, {"pass", o.pass}, {"details", o.details}});
    all = all && o.pass;
  }
  json j = {{"suite", ids.empty() ? suite : std::string("custom")}, {"criteria", rows}, {"pass", all}};
  return {emit(j), all ? 0 : 1};
}

// --- cache ----------------------------------------------------------------

std::optional<Result> cache_load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded() || !j.contains("body") || !j.contains("status")) return std::nullopt;
  return Result{j["body"].get<std::string>(), j["status"].get<int>()};
}

void cache_store(const std::filesystem::path& file, const Result& r) {
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << json{{"body", r.body}, {"status", r.status}}.dump();
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Representation counts, cohomology and crown data for finite groups over finite fields"};
  app.require_subcommand(1);
  app.footer(
      "Group grammar: gstar p n | sl n q | psl n q | alt b | sym b | cyclic n | elem p n | gnqm n q m |\n"
      "  sl2zmod p | crown <base> <k> | product <spec>; <spec> | <spec> x <spec> |\n"
      "  perm: (1 2 3)(4 5); (1 2) | mat GF(q): [[1,1],[0,1]]; [[0,1],[1,0]]\n"
      "Set REPGROWTH_CACHE_DIR to cache results by request hash.");

  Config cfg;
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--cap-enum", cfg.cap_enum, "group enumeration cap")->capture_default_str();
  app.add_option("--cap-chop", cfg.cap_chop, "module dimension cap for chopping")->capture_default_str();
  app.add_option("--budget", cfg.budget, "search budget for exhaustive searches")->capture_default_str();
  app.add_option("--out", cfg.out, "output path (default stdout)");
  app.add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_flag("--no-cache", cfg.no_cache, "ignore REPGROWTH_CACHE_DIR");

  std::string group, group2, target, kind = "regular";
  std::uint64_t field = 2, bound = 32;
  std::size_t maxdim = 4, k = 1, max_d = 4;
  unsigned deleted_p = 2, cexp = 0;
  bool reverse = false, fp1 = false, with_ag = false;
  std::vector<std::string> groups_list;
  std::string suite = "all";
  std::vector<int> ids;
  CheckArgs chk;

  auto* irr = app.add_subcommand("irr", "count irreducible modules by dimension");
  irr->add_option("--group", group)->required();
  irr->add_option("--field", field)->required();
  irr->add_option("--maxdim", maxdim)->capture_default_str();

  auto add_module_opts = [&](CLI::App* s) {
    s->add_option("--field", field)->capture_default_str();
    s->add_flag("--regular", [&](std::int64_t) { kind = "regular"; }, "regular module");
    s->add_flag("--natural", [&](std::int64_t) { kind = "natural"; }, "natural module of a matrix group");
    s->add_flag("--trivial", [&](std::int64_t) { kind = "trivial"; }, "trivial module");
    s->add_option("--deleted", deleted_p, "fully deleted permutation module over GF(p)")
        ->each([&](const std::string&) { kind = "deleted"; });
  };

  auto* chop = app.add_subcommand("chop", "composition factors of a module");
  chop->add_option("--group", group)->required();
  add_module_opts(chop);

  auto* coh = app.add_subcommand("cohom", "first cohomology (default: every simple module)");
  coh->add_option("--group", group)->required();
  add_module_opts(coh);
  coh->add_flag("--ag", with_ag, "compare with the chief-factor formula");
  coh->preparse_callback([&](std::size_t) { kind = "simples"; });

  auto* lh1 = app.add_subcommand("lh1", "least faithful simple module with nonzero H^1");
  lh1->add_option("--group", group)->required();
  lh1->add_option("--bound", bound)->capture_default_str();

  auto* chief = app.add_subcommand("chief", "chief series");
  chief->add_option("--group", group)->required();
  chief->add_flag("--reverse", reverse, "reverse the tie-break order");
  chief->add_flag("--fp1", fp1, "also compute the sup over simple modules");

  auto* crown = app.add_subcommand("crown", "crown-based power of a monolithic group");
  crown->add_option("--base", group)->required();
  crown->add_option("--k", k)->capture_default_str();
  crown->add_option("--max-d", max_d)->capture_default_str();

  auto* epi = app.add_subcommand("epi", "epimorphism census");
  epi->add_option("--group", group)->required();
  epi->add_option("--target", target)->required();

  auto* series = app.add_subcommand("series", "truncated representation zeta series of a direct product");
  series->add_option("--group", groups_list)->required();
  series->add_option("--field", field)->required();
  series->add_option("--maxdim", maxdim)->capture_default_str();
  series->add_option("--c", cexp, "evaluate at q^-c");

  auto* check = app.add_subcommand("check", "numeric bound and inequality checks");
  check->add_option("name", chk.name)
      ->required()
      ->check(CLI::IsMember({"gstar-bound", "sl-bound", "inequalities", "families", "product-bound", "convolution"}));
  check->add_option("--p", chk.p);
  check->add_option("--n", chk.n);
  check->add_option("--q", chk.q);
  check->add_option("--m", chk.m);
  check->add_option("--t", chk.t);
  check->add_option("--x", chk.x);
  check->add_option("--c", chk.c);
  check->add_option("--count", chk.count);
  check->add_option("--qs", chk.qs);
  check->add_option("--group", chk.group);
  check->add_option("--group2", chk.group2);
  check->add_option("--maxdim", chk.D);

  auto* ver = app.add_subcommand("verify", "acceptance suites");
  ver->add_option("--suite", suite)->capture_default_str();
  ver->add_option("--criterion", ids, "run these criteria instead of a suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  const std::string cmd = sub->get_name();

  json args;
  if (cmd == "irr") args = {{"group", group}, {"field", field}, {"maxdim", maxdim}};
  else if (cmd == "chop" || cmd == "cohom")
    args = {{"group", group}, {"field", field}, {"module", kind}, {"deleted", deleted_p}, {"ag", with_ag}};
  else if (cmd == "lh1") args = {{"group", group}, {"bound", bound}};
  else if (cmd == "chief") args = {{"group", group}, {"reverse", reverse}, {"fp1", fp1}};
  else if (cmd == "crown") args = {{"base", group}, {"k", k}, {"max_d", max_d}};
  else if (cmd == "epi") args = {{"group", group}, {"target", target}};
  else if (cmd == "series") args = {{"groups", groups_list}, {"field", field}, {"maxdim", maxdim}, {"c", cexp}};
  else if (cmd == "check") args = chk.to_json();
  else if (cmd == "verify") args = {{"suite", suite}, {"criteria", ids}};
  json request = {{"command", cmd}, {"args", args}, {"config", cfg.to_json()}};

  auto compute = [&]() -> Result {
    if (cfg.format == "csv" && cmd != "irr") throw UsageError("--format csv is only available for irr");
    Result r;
    if (cmd == "irr") r = cmd_irr(cfg, group, field, maxdim);
    else if (cmd == "chop") r = cmd_chop(cfg, group, field, kind, deleted_p);
    else if (cmd == "cohom") r = cmd_cohom(cfg, group, field, kind, deleted_p, with_ag);
    else if (cmd == "lh1") r = cmd_lh1(cfg, group, bound);
    else if (cmd == "chief") r = cmd_chief(cfg, group, reverse, fp1);
    else if (cmd == "crown") r = cmd_crown(cfg, group, k, max_d);
    else if (cmd == "epi") r = cmd_epi(cfg, group, target);
    else if (cmd == "series") r = cmd_series(cfg, groups_list, field, maxdim, cexp);
    else if (cmd == "check") r = cmd_check(cfg, chk);
    else r = cmd_verify(cfg, suite, ids);
    if (cfg.format == "json") {
      json j = json::parse(r.body);
      j["request"] = request;
      r.body = emit(j);
    }
    return r;
  };

  Result result;
  try {
    const char* cache_dir = std::getenv("REPGROWTH_CACHE_DIR");
    std::optional<std::filesystem::path> file;
    if (cache_dir && *cache_dir && !cfg.no_cache)
      file = std::filesystem::path(cache_dir) / (sha256_hex(request.dump()) + ".json");
    std::optional<Result> hit;
    if (file) hit = cache_load(*file);
    if (hit) {
      result = *hit;
      std::cerr << "cache: hit " << file->filename().string() << "\n";
    } else {
      result = compute();
      if (file) cache_store(*file, result);
    }
  } catch (const groups::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (cfg.out.empty()) {
    std::cout << result.body;
  } else {
    std::ofstream out(cfg.out);
    if (!out) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
    out << result.body;
  }
  return result.status;
}
