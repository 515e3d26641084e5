#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vcsys/compression.hpp"
#include "vcsys/generators.hpp"
#include "vcsys/io.hpp"
#include "vcsys/oracle.hpp"
#include "vcsys/stability.hpp"
#include "vcsys/vc.hpp"

namespace vcsys::cli {

namespace {

using Json = nlohmann::ordered_json;

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = digits[v & 15];
    v >>= 4;
  }
  return s;
}

struct Options {
  std::string in_file;
  std::string format = "ssys";
  bool json = false;
  bool oracle = false;
  int cap = 24;
  std::uint64_t seed = 0;
};

Caps caps_of(const Options& opt) {
  Caps caps;
  caps.max_domain = opt.cap;
  return caps;
}

// Everything a subcommand produces flows through this so that reports
// stay byte-identical for identical inputs; the timing footer goes to
// stderr separately.
struct Output {
  std::string command;
  std::string input_digest = "-";
  Json result = Json::object();
  std::vector<std::string> text;  // plain rendering, one line each

  void kv(const std::string& key, const Json& value, const std::string& line) {
    result[key] = value;
    text.push_back(line);
  }
};

Json system_to_json(const SetSystem& s) {
  Json j;
  j["domain"] = s.domain().elements();
  Json concepts = Json::array();
  for (Mask c : s.concepts()) concepts.push_back(s.domain().names_of(c));
  j["concepts"] = std::move(concepts);
  return j;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ' ';
    out += names[i];
  }
  return out.empty() ? "-" : out;
}

void emit_system(const SetSystem& s, const Options& opt, Output& o) {
  if (opt.format == "mat") {
    o.kv("system", system_to_json(s), serialize_mat(s));
  } else if (opt.format == "json") {
    o.kv("system", system_to_json(s), system_to_json(s).dump());
  } else {
    o.kv("system", system_to_json(s), serialize_ssys(s));
  }
}

void emit_bool(bool v, Output& o) {
  o.kv("value", v, v ? "true" : "false");
}

std::string read_stream(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open file '" + path + "'");
  return read_stream(f);
}

SetSystem load_system(const Options& opt, std::istream& in, Output& o) {
  const std::string text =
      opt.in_file.empty() ? read_stream(in) : read_file(opt.in_file);
  o.input_digest = hex64(fnv1a(text));
  return parse_auto(text, caps_of(opt));
}

PointConfig load_points(const std::string& path, Output& o) {
  const std::string text = read_file(path);
  o.input_digest = hex64(fnv1a(text));
  return parse_pts(text);
}

Mask parse_element_list(const SetSystem& s, const std::vector<std::string>& names) {
  if (names.size() == 1 && names[0] == "-") return 0;
  return s.domain().subset_of(names);
}

PartialType parse_labeling(const SetSystem& s,
                           const std::vector<std::string>& tokens) {
  PartialType t;
  for (const std::string& tok : tokens) {
    const std::size_t eq = tok.find('=');
    if (eq == std::string::npos || eq + 2 != tok.size() ||
        (tok[eq + 1] != '0' && tok[eq + 1] != '1'))
      throw Error("labeling token '" + tok + "' must look like elem=0 or elem=1");
    const std::string name = tok.substr(0, eq);
    auto idx = s.domain().index_of(name);
    if (!idx) throw DomainMismatchError("element '" + name + "' is not in the domain");
    const Mask bit = Mask{1} << *idx;
    if (t.support & bit) throw Error("element '" + name + "' labeled twice");
    t.support |= bit;
    if (tok[eq + 1] == '1') t.labels |= bit;
  }
  return t;
}

std::string pattern_string(Mask pattern, int width) {
  std::string s;
  for (int i = 0; i < width; ++i) s += ((pattern >> i) & 1) ? '1' : '0';
  return s;
}

LinearFamilySpec spec_for_family(const std::string& family,
                                 const PointConfig& config) {
  if (family == "threshold") return threshold_spec(config);
  if (family == "circle") return circle_spec(config);
  if (family == "parabola") return parabola_spec(config);
  throw Error("unknown family '" + family + "'");
}

void render(const Output& o, const Options& opt, std::ostream& out) {
  if (opt.json) {
    Json report;
    report["command"] = o.command;
    report["input_digest"] = o.input_digest;
    report["result"] = o.result;
    out << report.dump(2) << '\n';
  } else {
    for (const std::string& line : o.text) {
      out << line;
      if (line.empty() || line.back() != '\n') out << '\n';
    }
  }
}

int dispatch(CLI::App& app, const Options& opt, std::istream& in, Output& o);

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();

  CLI::App app{"Exact analysis of finite set systems: dimension, maximum and "
               "maximal status, forbidden labels, stability ladders, "
               "compression schemes, and generators."};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--in", opt.in_file, "Read the input system from a file instead of stdin");
  app.add_option("--format", opt.format, "Output format for systems")
      ->check(CLI::IsMember({"ssys", "mat", "json"}));
  app.add_flag("--json", opt.json, "Emit a JSON report");
  app.add_option("--cap", opt.cap, "Domain-size cap (structural limit 64)");
  app.add_option("--seed", opt.seed, "Seed for randomized generators");
  app.add_flag("--oracle", opt.oracle)->group("");  // debugging aid, hidden

  // Analysis over a system from stdin/--in.
  app.add_subcommand("vcdim", "VC dimension of the input system");
  auto* sc_shatter =
      app.add_subcommand("shatter", "Whether the input system shatters a subset");
  std::vector<std::string> shatter_elems;
  sc_shatter->add_option("elements", shatter_elems, "Subset elements ('-' for empty)")
      ->required();
  app.add_subcommand("maximum", "Whether the input system is a maximum family");
  auto* sc_maximal = app.add_subcommand("maximal", "Whether the family is maximal");
  int opt_d = -1;
  sc_maximal->add_option("--d", opt_d, "Expected VC dimension (default: computed)");
  app.add_subcommand("labels", "All forbidden labels of a maximum family");
  auto* sc_member = app.add_subcommand(
      "member", "Membership of a candidate labeling via forbidden labels");
  std::vector<std::string> member_elems;
  sc_member->add_option("elements", member_elems, "Candidate elements ('-' for empty)")
      ->required();
  auto* sc_helly =
      app.add_subcommand("helly", "Whether a partial labeling extends to a concept");
  std::vector<std::string> helly_tokens;
  sc_helly->add_option("labeling", helly_tokens, "Tokens elem=0 or elem=1");
  auto* sc_complete = app.add_subcommand("complete", "Greedy maximal completion");
  int complete_d = -1;
  sc_complete->add_option("--d", complete_d, "Expected VC dimension (default: computed)");
  auto* sc_ladder = app.add_subcommand("ladder", "Order-property ladder index");
  int ladder_cap = -1;
  sc_ladder->add_option("cap", ladder_cap, "Search cap (default: domain size)");
  app.add_subcommand("normal-form", "Symmetric-difference center and radius");
  app.add_subcommand("dual", "Dual system (elements and concepts exchanged)");
  auto* sc_delta = app.add_subcommand("delta", "Symmetric-difference shift by a subset");
  std::vector<std::string> delta_elems;
  sc_delta->add_option("elements", delta_elems, "Shift set ('-' for empty)")->required();
  auto* sc_compress = app.add_subcommand("compress", "Compress a realizable type");
  std::vector<std::string> compress_tokens;
  int compress_d = -1;
  sc_compress->add_option("type", compress_tokens, "Tokens elem=0 or elem=1")->required();
  sc_compress->add_option("--d", compress_d, "Kept-set size bound (default: computed)");
  auto* sc_reconstruct =
      app.add_subcommand("reconstruct", "Rebuild a type from a compression record");
  std::vector<std::string> kept_tokens, over_names;
  sc_reconstruct->add_option("--kept", kept_tokens, "Record tokens elem=0 or elem=1");
  sc_reconstruct->add_option("--over", over_names, "Target support elements")->required();
  auto* sc_verify = app.add_subcommand(
      "verify-scheme", "Verify the type-compression scheme on the input system");
  int verify_d = -1;
  sc_verify->add_option("--d", verify_d, "Scheme dimension (default: computed)");
  app.add_subcommand("report", "Full deterministic analysis report");

  // Generators.
  auto* sc_gen = app.add_subcommand("gen", "Family generators");
  sc_gen->require_subcommand(1);
  int g_n = 0, g_d = 0, g_m = 0;
  auto* gen_ks = sc_gen->add_subcommand("k-subsets", "All subsets of size <= d");
  gen_ks->add_option("n", g_n)->required();
  gen_ks->add_option("d", g_d)->required();
  auto* gen_ne = sc_gen->add_subcommand("nonempty", "Subsets of size 1..d");
  gen_ne->add_option("n", g_n)->required();
  gen_ne->add_option("d", g_d)->required();
  auto* gen_iv = sc_gen->add_subcommand("intervals", "At most m runs on the n-chain");
  gen_iv->add_option("n", g_n)->required();
  gen_iv->add_option("m", g_m)->required();
  auto* gen_pf = sc_gen->add_subcommand("prefixes", "Initial segments of the n-chain");
  gen_pf->add_option("n", g_n)->required();
  std::string pts_file, family = "circle";
  auto* gen_pos = sc_gen->add_subcommand("pos", "Positivity family over a point file");
  gen_pos->add_option("points", pts_file, ".pts file")->required();
  gen_pos->add_option("--family", family, "threshold|circle|parabola");
  auto* gen_ci = sc_gen->add_subcommand("circles", "Circle family over a point file");
  gen_ci->add_option("points", pts_file, ".pts file")->required();
  auto* gen_re =
      sc_gen->add_subcommand("rectangles", "Axis-parallel rectangle traces");
  gen_re->add_option("points", pts_file, ".pts file")->required();
  auto* gen_rm = sc_gen->add_subcommand("random-maximal",
                                        "Greedy maximal family in seeded order");
  gen_rm->add_option("n", g_n)->required();
  gen_rm->add_option("d", g_d)->required();

  auto* sc_gp = app.add_subcommand("validate-gp", "General-position validation");
  sc_gp->add_option("points", pts_file, ".pts file")->required();
  sc_gp->add_option("--family", family, "threshold|circle|parabola");

  Output o;
  {
    std::string cmdline = "vcsys";
    for (const std::string& a : args) cmdline += " " + a;
    o.command = cmdline;
  }

  int code = 0;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    auto need_d = [](int requested, const SetSystem& s) {
      return requested < 0 ? vc_dimension(s) : requested;
    };

    if (app.got_subcommand("vcdim")) {
      const SetSystem s = load_system(opt, in, o);
      const int d = opt.oracle ? oracle::vc_dimension(s) : vc_dimension(s);
      o.kv("vc_dimension", d, std::to_string(d));
    } else if (app.got_subcommand(sc_shatter)) {
      const SetSystem s = load_system(opt, in, o);
      emit_bool(shatters(s, parse_element_list(s, shatter_elems)), o);
    } else if (app.got_subcommand("maximum")) {
      const SetSystem s = load_system(opt, in, o);
      emit_bool(opt.oracle ? oracle::is_maximum(s) : is_maximum(s), o);
    } else if (app.got_subcommand(sc_maximal)) {
      const SetSystem s = load_system(opt, in, o);
      const int d = need_d(opt_d, s);
      emit_bool(opt.oracle ? oracle::is_maximal(s, d) : is_maximal(s, d), o);
    } else if (app.got_subcommand("labels")) {
      const SetSystem s = load_system(opt, in, o);
      const std::vector<ForbiddenLabel> labels = all_forbidden_labels(s);
      Json arr = Json::array();
      for (const ForbiddenLabel& l : labels) {
        Json rec;
        rec["witness"] = s.domain().names_of(l.witness_set);
        rec["pattern"] = pattern_string(l.pattern, popcount(l.witness_set));
        rec["forbidden"] = s.domain().names_of(l.forbidden_subset);
        arr.push_back(std::move(rec));
        o.text.push_back("witness: " + join_names(s.domain().names_of(l.witness_set)) +
                         "  pattern: " + pattern_string(l.pattern, popcount(l.witness_set)) +
                         "  forbidden: " + join_names(s.domain().names_of(l.forbidden_subset)));
      }
      o.result["labels"] = std::move(arr);
      o.result["count"] = labels.size();
      o.text.push_back("count: " + std::to_string(labels.size()));
    } else if (app.got_subcommand(sc_member)) {
      const SetSystem s = load_system(opt, in, o);
      emit_bool(member_by_forbidden_labels(s, parse_element_list(s, member_elems)), o);
    } else if (app.got_subcommand(sc_helly)) {
      const SetSystem s = load_system(opt, in, o);
      emit_bool(helly_consistent(s, parse_labeling(s, helly_tokens)), o);
    } else if (app.got_subcommand(sc_complete)) {
      const SetSystem s = load_system(opt, in, o);
      emit_system(maximal_completion(s, need_d(complete_d, s)), opt, o);
    } else if (app.got_subcommand(sc_ladder)) {
      const SetSystem s = load_system(opt, in, o);
      const int cap = ladder_cap < 0 ? s.n() : ladder_cap;
      if (opt.oracle) {
        const int len = oracle::ladder_index(s, cap);
        o.kv("ladder_index", len, std::to_string(len));
      } else {
        const LadderResult r = ladder_index(s, cap);
        o.result["ladder_index"] = r.length;
        Json pts = Json::array(), wits = Json::array();
        for (int p : r.witness.points) pts.push_back(s.domain().name(p));
        for (Mask c : r.witness.witnesses) wits.push_back(s.domain().names_of(c));
        o.result["points"] = std::move(pts);
        o.result["witnesses"] = std::move(wits);
        o.text.push_back(std::to_string(r.length));
      }
    } else if (app.got_subcommand("normal-form")) {
      const SetSystem s = load_system(opt, in, o);
      const NormalForm nf = stable_normal_form(s);
      o.result["radius"] = nf.radius;
      o.result["center"] = s.domain().names_of(nf.center);
      o.text.push_back("radius: " + std::to_string(nf.radius));
      o.text.push_back("center: " + join_names(s.domain().names_of(nf.center)));
    } else if (app.got_subcommand("dual")) {
      const SetSystem s = load_system(opt, in, o);
      Caps dual_caps = caps_of(opt);
      dual_caps.max_domain = std::max(dual_caps.max_domain, opt.cap);
      emit_system(dual(s, dual_caps), opt, o);
    } else if (app.got_subcommand(sc_delta)) {
      const SetSystem s = load_system(opt, in, o);
      emit_system(delta_shift(s, parse_element_list(s, delta_elems)), opt, o);
    } else if (app.got_subcommand(sc_compress)) {
      const SetSystem s = load_system(opt, in, o);
      const PartialType type = parse_labeling(s, compress_tokens);
      const int d = compress_d < 0 ? certify_maximum(s).dimension : compress_d;
      const CompressionRecord rec = compress_type(s, type, d);
      o.result["kept"] = s.domain().names_of(rec.kept);
      o.result["kept_labels"] =
          pattern_string(gather_bits(rec.kept_labels, rec.kept), popcount(rec.kept));
      std::string line = "kept:";
      for (int i : mask_to_indices(rec.kept))
        line += " " + s.domain().name(i) + "=" +
                (((rec.kept_labels >> i) & 1) ? "1" : "0");
      o.text.push_back(popcount(rec.kept) ? line : "kept: -");
    } else if (app.got_subcommand(sc_reconstruct)) {
      const SetSystem s = load_system(opt, in, o);
      const PartialType kept = parse_labeling(s, kept_tokens);
      const CompressionRecord rec{kept.support, kept.labels};
      const Mask over = s.domain().subset_of(over_names);
      const PartialType t = opt.oracle ? oracle::reconstruct(s, rec, over)
                                       : reconstruct_type(s, rec, over);
      std::string line;
      Json arr = Json::array();
      for (int i : mask_to_indices(t.support)) {
        const bool v = (t.labels >> i) & 1;
        if (!line.empty()) line += ' ';
        line += s.domain().name(i) + "=" + (v ? "1" : "0");
        arr.push_back(s.domain().name(i) + "=" + (v ? "1" : "0"));
      }
      o.result["type"] = std::move(arr);
      o.text.push_back(line);
    } else if (app.got_subcommand(sc_verify)) {
      const SetSystem s = load_system(opt, in, o);
      const int d = verify_d < 0 ? certify_maximum(s).dimension : verify_d;
      const L2Scheme scheme = make_l2_scheme(s, d);
      const SchemeVerification v =
          verify_extended_compression(s, d, scheme.kappa, scheme.rhos);
      emit_bool(v.ok, o);
      if (!v.ok) {
        o.result["support"] = s.domain().names_of(v.counterexample->support);
        o.result["labels"] = s.domain().names_of(v.counterexample->labels);
        o.result["violated_axiom"] = v.counterexample->violated_axiom;
        o.text.push_back("counterexample support: " +
                         join_names(s.domain().names_of(v.counterexample->support)));
      }
    } else if (app.got_subcommand("report")) {
      const SetSystem s = load_system(opt, in, o);
      const int d = vc_dimension(s);
      const bool maximum = is_maximum(s);
      o.kv("elements", s.n(), "elements: " + std::to_string(s.n()));
      o.kv("concepts", s.size(), "concepts: " + std::to_string(s.size()));
      o.kv("vc_dimension", d, "vc_dimension: " + std::to_string(d));
      o.kv("sauer_phi", sauer_phi(d, s.n()).str(),
           "sauer_phi: " + sauer_phi(d, s.n()).str());
      o.kv("is_maximum", maximum, std::string("is_maximum: ") + (maximum ? "true" : "false"));
      const bool maximal = is_maximal(s, d);
      o.kv("is_maximal", maximal, std::string("is_maximal: ") + (maximal ? "true" : "false"));
      const LadderResult lr = ladder_index(s, s.n());
      o.kv("ladder_index", lr.length, "ladder_index: " + std::to_string(lr.length));
      const NormalForm nf = stable_normal_form(s);
      o.kv("radius", nf.radius, "radius: " + std::to_string(nf.radius));
      o.kv("center", s.domain().names_of(nf.center),
           "center: " + join_names(s.domain().names_of(nf.center)));
      if (maximum && d + 1 <= s.n()) {
        const auto labels = all_forbidden_labels(s);
        o.kv("forbidden_labels", labels.size(),
             "forbidden_labels: " + std::to_string(labels.size()));
      }
    } else if (app.got_subcommand(sc_gen)) {
      SetSystem out_system = [&]() -> SetSystem {
        const Caps caps = caps_of(opt);
        if (sc_gen->got_subcommand(gen_ks)) return gen_k_subsets(g_n, g_d, caps);
        if (sc_gen->got_subcommand(gen_ne))
          return gen_nonempty_k_subsets(g_n, g_d, caps);
        if (sc_gen->got_subcommand(gen_iv)) return gen_interval_unions(g_n, g_m, caps);
        if (sc_gen->got_subcommand(gen_pf)) return gen_prefixes(g_n, caps);
        if (sc_gen->got_subcommand(gen_pos)) {
          const PointConfig config = load_points(pts_file, o);
          return gen_pos_family(config, spec_for_family(family, config), caps);
        }
        if (sc_gen->got_subcommand(gen_ci)) {
          const PointConfig config = load_points(pts_file, o);
          return gen_circles(config, caps);
        }
        if (sc_gen->got_subcommand(gen_re)) {
          const PointConfig config = load_points(pts_file, o);
          return gen_rectangles(config, caps);
        }
        const PointConfig dummy({Point{0, 0}});
        (void)dummy;
        return gen_random_maximal(g_n, g_d, opt.seed, caps);
      }();
      emit_system(out_system, opt, o);
    } else if (app.got_subcommand(sc_gp)) {
      const PointConfig config = load_points(pts_file, o);
      const GpReport r =
          validate_general_position(config, spec_for_family(family, config));
      emit_bool(r.ok, o);
      if (!r.ok) {
        o.result["violation"] =
            r.kind == GpViolation::rank_deficient ? "rank_deficient" : "interpolated";
        Json pts = Json::array();
        std::string line = "violation: ";
        line += r.kind == GpViolation::rank_deficient ? "rank_deficient" : "interpolated";
        line += " at points";
        for (int i : r.subset) {
          pts.push_back(i);
          line += " " + std::to_string(i);
        }
        o.result["points"] = std::move(pts);
        o.text.push_back(line);
      }
    }

    render(o, opt, out);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const CapExceededError& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return 5;
  } catch (const PreconditionError& e) {
    err << "precondition violation: " << e.what() << '\n';
    return 4;
  } catch (const DomainMismatchError& e) {
    err << "precondition violation: " << e.what() << '\n';
    return 4;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }

  const auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - started);
  err << "# time_ms=" << (static_cast<double>(elapsed.count()) / 1000.0) << '\n';
  return code;
}

}  // namespace vcsys::cli
