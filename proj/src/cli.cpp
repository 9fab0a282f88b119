#include "orbicalc/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbicalc/bundles.hpp"
#include "orbicalc/category.hpp"
#include "orbicalc/corpus.hpp"
#include "orbicalc/homs.hpp"
#include "orbicalc/nerve.hpp"
#include "orbicalc/stable_maps.hpp"
#include "orbicalc/transversality.hpp"

#ifndef ORBICALC_VERSION
#define ORBICALC_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace orbicalc::cli {

std::string version() { return ORBICALC_VERSION; }

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("sha256 failed");
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("input-file", "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Digest of every .json file of a directory, in name order.
std::string directory_digest(const std::string& dir) {
  if (!fs::is_directory(dir)) throw DomainError("corpus", "corpus directory '" + dir + "' does not exist");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::string acc;
  for (const auto& f : files) acc += f.filename().string() + ":" + sha256_hex(read_file(f.string())) + "\n";
  return sha256_hex(acc);
}

struct Run {
  std::string command;
  ojson inputs = ojson::array();
  ojson params = ojson::object();
  ojson result;
  std::string text;  // plain-text output replaces the JSON document when set
};

// Same lookup as resolve_group, recording the digest of the file actually read.
NamedGroup group_input(Run& run, const std::string& arg) {
  std::string path = arg;
  if (!fs::is_regular_file(path)) {
    const fs::path candidate = fs::path(corpus_directory()) / (arg + ".json");
    if (fs::is_regular_file(candidate)) path = candidate.string();
  }
  NamedGroup g = resolve_group(arg);
  run.inputs.push_back({{"argument", arg}, {"sha256", sha256_hex(read_file(path))}});
  return g;
}

void corpus_input(Run& run) {
  run.inputs.push_back({{"argument", "corpus"}, {"sha256", directory_digest(corpus_directory())}});
}

ojson int_list(const std::vector<int>& v) { return ojson(v); }

ojson cyclotomic_list(const std::vector<Cyclotomic>& v) {
  ojson out = ojson::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

// Exact integer: a JSON number when it fits, else its decimal string.
ojson exact(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

// ---- group ----

void cmd_group(Run& run, const std::string& file) {
  const NamedGroup ng = group_input(run, file);
  const auto& g = ng.group;
  ojson classes = ojson::array();
  for (const auto& c : g.classes())
    classes.push_back({{"representative", c.front()}, {"size", c.size()}, {"element_order", g.element_order(c.front())}});
  ojson subs = ojson::array();
  for (const auto& s : subgroup_classes(g))
    subs.push_back({{"order", s.order()},
                    {"conjugates", s.conjugates_count},
                    {"normalizer_order", s.normalizer_order},
                    {"normal", s.conjugates_count == 1},
                    {"representative", int_list(s.representative)}});
  run.result = {{"name", ng.name},
                {"description", ng.description},
                {"order", g.order()},
                {"exponent", g.exponent()},
                {"abelian", g.is_abelian()},
                {"center_order", center(g).size()},
                {"classes", classes},
                {"subgroup_classes", subs}};
}

// ---- irreps ----

std::string character_table_text(const NamedGroup& ng, const RealIrrepTable& t) {
  const auto& ct = t.complex;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"", "FS"};
  for (std::size_t j = 0; j < ct.class_reps.size(); ++j)
    head.push_back(std::to_string(ct.class_sizes[j]) + "x" + std::to_string(ct.class_reps[j]));
  rows.push_back(head);
  for (std::size_t i = 0; i < ct.size(); ++i) {
    std::vector<std::string> row{"X." + std::to_string(i + 1), std::to_string(t.indicators[i])};
    for (const auto& v : ct.values[i]) row.push_back(v.to_string());
    rows.push_back(row);
  }
  std::vector<std::size_t> width(head.size(), 0);
  for (const auto& r : rows)
    for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
  std::ostringstream out;
  out << ng.name << " (order " << ng.group.order() << ")\n";
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (j) out << "  ";
      out << std::setw(static_cast<int>(width[j])) << r[j];
    }
    out << "\n";
  }
  out << "\nreal irreps\n";
  for (const auto& e : t.entries) {
    out << "  R." << e.id << "  dim " << e.real_dimension << "  " << to_string(e.end_type) << "  from X.";
    for (std::size_t k = 0; k < e.constituents.size(); ++k) out << (k ? ",X." : "") << e.constituents[k] + 1;
    out << "\n";
  }
  return out.str();
}

void cmd_irreps(Run& run, const std::string& file, bool text) {
  const NamedGroup ng = group_input(run, file);
  const auto t = real_irreps(ng.group);
  run.params["text"] = text;
  if (text) {
    run.text = character_table_text(ng, t);
    return;
  }
  ojson classes = ojson::array();
  for (std::size_t j = 0; j < t.complex.class_reps.size(); ++j)
    classes.push_back({{"representative", t.complex.class_reps[j]}, {"size", t.complex.class_sizes[j]}});
  ojson complex = ojson::array();
  for (std::size_t i = 0; i < t.complex.size(); ++i)
    complex.push_back({{"degree", t.complex.degrees[i]},
                       {"fs_indicator", t.indicators[i]},
                       {"values", cyclotomic_list(t.complex.values[i])}});
  ojson entries = ojson::array();
  for (const auto& e : t.entries) {
    ojson fs = ojson::array();
    ojson cons = ojson::array();
    for (auto c : e.constituents) {
      fs.push_back(t.indicators[c]);
      cons.push_back(c);
    }
    entries.push_back({{"id", e.id},
                       {"dim", e.real_dimension},
                       {"end_type", to_string(e.end_type)},
                       {"fs_indicators", fs},
                       {"constituents", cons},
                       {"character", cyclotomic_list(e.character)}});
  }
  run.result = {{"group", ng.name},
                {"order", ng.group.order()},
                {"classes", classes},
                {"complex_characters", complex},
                {"entries", entries}};
}

// ---- homs ----

void cmd_homs(Run& run, const std::string& gf, const std::string& hf, bool injective) {
  const NamedGroup g = group_input(run, gf);
  const NamedGroup h = group_input(run, hf);
  run.params["injective"] = injective;
  const auto classes = injective ? rep_hom_classes(g.group, h.group).injective : hom_classes(g.group, h.group);
  ojson out = ojson::array();
  for (const auto& c : classes)
    out.push_back({{"rep", int_list(c.representative)},
                   {"orbit", c.orbit_size},
                   {"centralizer", c.centralizer_order},
                   {"injective", c.injective}});
  run.result = {{"source", g.name}, {"target", h.name}, {"count", classes.size()}, {"classes", out}};
}

// ---- bundles ----

void cmd_bundles(Run& run, const std::string& file) {
  const NamedGroup ng = group_input(run, file);
  const auto t = real_irreps(ng.group);
  ojson irreps = ojson::array();
  for (const auto& e : t.entries)
    irreps.push_back({{"id", e.id}, {"dim", e.real_dimension}, {"end_type", to_string(e.end_type)}});
  const StableBundle zero{std::vector<long>(t.size(), 0)};
  const int width = framing_width(t);
  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), 2, static_cast<unsigned long>(width));
  run.result = {{"group", ng.name},
                {"real_irreps", irreps},
                {"stable_aut_contributors", int_list(aut_group(t, zero))},
                {"framing_width", width},
                {"framing_count", exact(count)}};
}

// ---- stable-maps ----

void cmd_stable_maps(Run& run, const std::string& gf, const std::string& hf, const std::string& variant) {
  const NamedGroup g = group_input(run, gf);
  const NamedGroup h = group_input(run, hf);
  const MapVariant v = parse_variant(variant);
  run.params["variant"] = to_string(v);
  const auto pres = map_group(g.group, h.group, v);
  ojson basis = ojson::array();
  for (const auto& b : pres.basis)
    basis.push_back({{"K_order", b.k_elements.size()},
                     {"K_class", b.k_class},
                     {"K_elements", int_list(b.k_elements)},
                     {"g_rep", int_list(b.g)},
                     {"g_injective", b.g_injective},
                     {"framing_bits", b.framing.bits},
                     {"framing_width", b.framing.width}});
  run.result = {{"source", g.name},
                {"target", h.name},
                {"variant", to_string(v)},
                {"generator_classes", pres.generators.size()},
                {"rank", pres.rank},
                {"basis", basis}};
}

// ---- rstar ----

void cmd_rstar(Run& run, int max_order, int max_dim, bool census, bool all_injections) {
  if (max_dim < 0) throw DomainError("max-dim", "--max-dim must be nonnegative");
  corpus_input(run);
  const auto filter = all_injections ? ArrowFilter::AllInjections : ArrowFilter::Proper;
  run.params["max_order"] = max_order;
  run.params["max_dim"] = max_dim;
  run.params["mode"] = census ? "census" : "homology";
  run.params["arrows"] = all_injections ? "all-injections" : "proper";
  const auto cat = build_quotient_category(max_order, corpus_directory());
  const auto cc = cell_census(cat, max_dim, filter);
  ojson objects = ojson::array();
  for (std::size_t i = 0; i < cat.size(); ++i)
    objects.push_back({{"index", i}, {"name", cat.objects[i].name}, {"order", cat.objects[i].group.order()}});
  run.result = {{"max_order", max_order}, {"max_dim", max_dim}, {"objects", objects}};
  if (census) {
    ojson dims = ojson::array();
    for (std::size_t p = 0; p < cc.cells.size(); ++p) {
      ojson cells = ojson::array();
      for (const auto& c : cc.cells[p]) {
        ojson names = ojson::array();
        for (int o : c.objects) names.push_back(cat.objects[o].name);
        cells.push_back({{"objects", names}, {"arrows", int_list(c.arrows)}, {"isotropy", cat.objects[c.isotropy()].name}});
      }
      dims.push_back({{"dim", p}, {"count", cc.cells[p].size()}, {"cells", cells}});
    }
    run.result["census"] = dims;
    return;
  }
  const auto hom = homology(nerve_chain_complex(cat, cc));
  ojson table = ojson::array();
  for (std::size_t p = 0; p < hom.size(); ++p) {
    ojson torsion = ojson::array();
    for (const auto& t : hom[p].torsion) torsion.push_back(exact(t));
    table.push_back({{"degree", p}, {"betti", hom[p].betti}, {"torsion", torsion}, {"reliable", hom[p].reliable}});
  }
  run.result["homology"] = table;
}

// ---- localize ----

std::string span_name(const FiniteCategory& c, const Span& s) { return c.arrow(s.s).name + "^-1 ; " + c.arrow(s.f).name; }

void cmd_localize(Run& run, const std::string& file, const std::string& from, const std::string& to, bool verify) {
  run.inputs.push_back({{"argument", file}, {"sha256", sha256_hex(read_file(file))}});
  run.params["from"] = from;
  run.params["to"] = to;
  run.params["verify"] = verify;
  const CategoryFile cf = load_category_file(file);
  const auto& c = cf.category;
  const RmsVerdict v = check_right_multiplicative(c, cf.w);
  if (!v.valid) {
    std::string w;
    for (const auto& s : v.witness) w += (w.empty() ? "" : ", ") + s;
    throw DomainError("rms/" + v.axiom, "W is not a right multiplicative system: " + v.axiom + " fails at {" + w + "}");
  }
  const int x = c.object_index(from), y = c.object_index(to);
  const auto spans = localize_hom(c, cf.w, x, y);
  ojson morphisms = ojson::array();
  for (const auto& s : spans)
    morphisms.push_back({{"s", c.arrow(s.s).name}, {"f", c.arrow(s.f).name}, {"label", span_name(c, s)}});
  ojson hom_c = ojson::array();
  for (int f : c.hom(x, y)) hom_c.push_back(c.arrow(f).name);
  ojson w = ojson::array();
  for (int a : cf.w) w.push_back(c.arrow(a).name);
  run.result = {{"from", from},
                {"to", to},
                {"W", w},
                {"hom_C", hom_c},
                {"count", spans.size()},
                {"morphisms", morphisms}};
  if (verify) {
    const auto r = verify_universal_property(c, cf.w);
    run.result["universal_property"] = {{"holds", r.holds}, {"functors_checked", r.functors_checked}, {"failure", r.failure}};
  }
}

// ---- detect ----

Rational json_rational(const nlohmann::json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw DomainError("matrix-file", e.what());
    }
  }
  throw DomainError("matrix-file", "entries must be integers or \"p/q\" strings");
}

Matrix<Rational> json_matrix(const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty() || !rows[0].is_array())
    throw DomainError("matrix-file", "a matrix is a nonempty array of rows");
  Matrix<Rational> m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != m.cols()) throw DomainError("matrix-file", "ragged matrix");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = json_rational(rows[i][j]);
  }
  return m;
}

// {"images": [M_0, ..., M_{n-1}]} or {"generators": [elements], "matrices": [M, ...]}.
MatrixRep<Rational> load_matrix_rep(const FiniteGroup& g, const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("matrix-file", std::string("not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DomainError("matrix-file", "matrix file must be a JSON object");
  try {
    if (doc.contains("images")) {
      std::vector<Matrix<Rational>> images;
      for (const auto& m : doc.at("images")) images.push_back(json_matrix(m));
      return MatrixRep<Rational>(g, std::move(images), 0.0);
    }
    const auto gens = doc.at("generators").get<std::vector<int>>();
    for (int x : gens)
      if (x < 0 || x >= g.order()) throw DomainError("matrix-file", "generator index out of range");
    std::vector<Matrix<Rational>> mats;
    for (const auto& m : doc.at("matrices")) mats.push_back(json_matrix(m));
    return MatrixRep<Rational>::from_generators(g, gens, mats, 0.0);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("matrix-file", e.what());
  }
}

void cmd_detect(Run& run, const std::string& file, const std::string& rep) {
  const NamedGroup ng = group_input(run, file);
  DetectorReport r;
  const bool is_index = !rep.empty() && std::all_of(rep.begin(), rep.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  if (is_index && !fs::is_regular_file(rep)) {
    const auto t = real_irreps(ng.group);
    const std::size_t i = std::stoul(rep);
    if (i >= t.size())
      throw DomainError("rep-index", "real irrep index " + rep + " out of range (" + std::to_string(t.size()) + " irreps)");
    r = derived_class_detector(ng.group, t, t.entries[i].character);
    run.params["rep"] = {{"real_irrep", i}};
  } else {
    const std::string text = read_file(rep);
    run.inputs.push_back({{"argument", rep}, {"sha256", sha256_hex(text)}});
    run.params["rep"] = "matrix-file";
    r = derived_class_detector(load_matrix_rep(ng.group, text));
  }
  run.result = {{"group", ng.name}, {"fixed_dim", r.fixed_dim}, {"degree", r.degree}, {"verdict", to_string(r.verdict)}};
}

// ---- corpus ----

ojson corpus_entry(const NamedGroup& ng) {
  const auto t = real_irreps(ng.group);
  std::map<std::string, int> ends{{"R", 0}, {"C", 0}, {"H", 0}};
  for (const auto& e : t.entries) ++ends[to_string(e.end_type)];
  return {{"name", ng.name},
          {"description", ng.description},
          {"order", ng.group.order()},
          {"abelian", ng.group.is_abelian()},
          {"classes", ng.group.classes().size()},
          {"complex_irreps", t.complex.size()},
          {"real_irreps", t.size()},
          {"end_types", {{"R", ends["R"]}, {"C", ends["C"]}, {"H", ends["H"]}}}};
}

void cmd_corpus(Run& run, int max_order, int jobs) {
  corpus_input(run);
  run.params["max_order"] = max_order;
  const auto groups = corpus_groups_up_to(max_order, corpus_directory());
  std::vector<ojson> entries(groups.size());
  std::vector<std::exception_ptr> errors(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < groups.size();) {
      try {
        entries[i] = corpus_entry(groups[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < std::max(1, jobs); ++j) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  run.result = {{"directory_entries", groups.size()}, {"groups", entries}};
}

ojson error_record(const std::string& invariant, const std::string& message) {
  return {{"error", {{"invariant", invariant}, {"message", message}}}};
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  Outcome outcome;
  std::ostringstream out, err;

  CLI::App app{"Exact calculator for finite-group orbispace invariants", "orbicalc"};
  app.set_version_flag("--version", version());
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON document to this path instead of stdout");

  Run run;
  std::function<void()> action;
  std::string g_file, h_file, variant = "rep", cat_file, from, to, rep;
  bool injective = false, text = false, census = false, homology_flag = false, all_injections = false, verify = false;
  int max_order = 0, max_dim = 0, jobs = 1, corpus_max = 24;

  auto with_out = [&](CLI::App* sub) { sub->add_option("--out", out_path, "Write the JSON document to this path"); };

  auto* group = app.add_subcommand("group", "Group summary: classes, center, subgroup classes");
  group->add_option("group", g_file, "Group file or corpus name")->required();
  with_out(group);
  group->callback([&] { action = [&] { cmd_group(run, g_file); }; });

  auto* irreps = app.add_subcommand("irreps", "Complex character table and real irreducible representations");
  irreps->add_option("group", g_file, "Group file or corpus name")->required();
  irreps->add_flag("--text", text, "Print a plain-text character table instead of JSON");
  with_out(irreps);
  irreps->callback([&] { action = [&] { cmd_irreps(run, g_file, text); }; });

  auto* homs = app.add_subcommand("homs", "Conjugacy classes of homomorphisms G -> H");
  homs->add_option("G", g_file, "Source group")->required();
  homs->add_option("H", h_file, "Target group")->required();
  homs->add_flag("--injective", injective, "Only injective classes");
  with_out(homs);
  homs->callback([&] { action = [&] { cmd_homs(run, g_file, h_file, injective); }; });

  auto* bundles = app.add_subcommand("bundles", "Stable bundles and framings over BG");
  bundles->add_option("group", g_file, "Group file or corpus name")->required();
  with_out(bundles);
  bundles->callback([&] { action = [&] { cmd_bundles(run, g_file); }; });

  auto* stable = app.add_subcommand("stable-maps", "Presentation of the group of stable maps BG -> BH");
  stable->add_option("G", g_file, "Source group")->required();
  stable->add_option("H", h_file, "Target group")->required();
  stable->add_option("--variant", variant, "rep or orb")->check(CLI::IsMember({"rep", "orb"}))->capture_default_str();
  with_out(stable);
  stable->callback([&] { action = [&] { cmd_stable_maps(run, g_file, h_file, variant); }; });

  auto* rstar = app.add_subcommand("rstar", "Cells and homology of the truncated nerve of finite groups and injections");
  rstar->add_option("--max-order", max_order, "Largest group order N (1..12)")->required();
  rstar->add_option("--max-dim", max_dim, "Largest chain length k")->required();
  auto* census_flag = rstar->add_flag("--census", census, "Emit the cell census");
  auto* homology_opt = rstar->add_flag("--homology", homology_flag, "Emit Betti numbers and torsion (default)");
  census_flag->excludes(homology_opt);
  rstar->add_flag("--all-injections", all_injections, "Keep automorphism arrows in the nerve");
  with_out(rstar);
  rstar->callback([&] { action = [&] { cmd_rstar(run, max_order, max_dim, census, all_injections); }; });

  auto* localize = app.add_subcommand("localize", "Hom-set of a localization C[W^-1]");
  localize->add_option("category", cat_file, "Category file")->required()->check(CLI::ExistingFile);
  localize->add_option("--from", from, "Source object")->required();
  localize->add_option("--to", to, "Target object")->required();
  localize->add_flag("--verify", verify, "Also brute-force the universal property");
  with_out(localize);
  localize->callback([&] { action = [&] { cmd_localize(run, cat_file, from, to, verify); }; });

  auto* detect = app.add_subcommand("detect", "Detector for the point class of a linear derived chart");
  detect->add_option("group", g_file, "Group file or corpus name")->required();
  detect->add_option("--rep", rep, "Real irrep index or matrix file")->required();
  with_out(detect);
  detect->callback([&] { action = [&] { cmd_detect(run, g_file, rep); }; });

  auto* corpus = app.add_subcommand("corpus", "Summaries of the bundled groups");
  corpus->add_option("--max-order", corpus_max, "Largest order listed")->capture_default_str();
  corpus->add_option("--jobs", jobs, "Worker threads across groups")->check(CLI::Range(1, 256))->capture_default_str();
  with_out(corpus);
  corpus->callback([&] { action = [&] { cmd_corpus(run, corpus_max, jobs); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    outcome.status = code == 0 ? kExitOk : kExitUsage;
    outcome.out = out.str();
    outcome.err = err.str();
    return outcome;
  }
  run.command = app.get_subcommands().front()->get_name();

  try {
    action();
    std::string body;
    if (!run.text.empty()) {
      body = run.text;
    } else {
      const std::string digest = sha256_hex(run.result.dump());
      ojson doc;
      doc["schema"] = "orbicalc/" + run.command + "/v1";
      doc["result"] = run.result;
      doc["manifest"] = {{"command", run.command},
                         {"inputs", run.inputs},
                         {"params", run.params},
                         {"version", version()},
                         {"output_sha256", digest}};
      body = doc.dump(2) + "\n";
    }
    if (out_path.empty()) {
      outcome.out = body;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!(f << body)) throw DomainError("output-file", "cannot write '" + out_path + "'");
    }
  } catch (const DomainError& e) {
    outcome.status = kExitDomain;
    outcome.err = error_record(e.invariant(), e.what()).dump(2) + "\n";
  } catch (const InternalError& e) {
    outcome.status = kExitDomain;
    outcome.err = error_record("internal", e.what()).dump(2) + "\n";
  }
  return outcome;
}

}  // namespace orbicalc::cli
