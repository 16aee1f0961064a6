#include <quiverspec/quiverspec.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace quiverspec;

// Flag values are argv-level problems -> usage error, exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<int> parse_index_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      out.push_back(v - 1);  // 1-based on the command line
    } catch (const std::exception&) {
      throw UsageError(std::string(what) + ": expected comma-separated positive integers, got '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string(what) + ": empty list");
  return out;
}

ClassLimits parse_limits(const std::string& text) {
  ClassLimits limits;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--limits: expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    long num = 0;
    try {
      std::size_t used = 0;
      num = std::stol(val, &used);
      if (used != val.size() || num < 1) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw UsageError("--limits: value for '" + key + "' must be a positive integer, got '" + val + "'");
    }
    if (key == "max_quivers")
      limits.max_quivers = num;
    else if (key == "max_entry")
      limits.max_entry = num;
    else if (key == "max_depth")
      limits.max_depth = static_cast<int>(num);
    else
      throw UsageError("--limits: unknown key '" + key + "' (use max_quivers, max_entry, max_depth)");
  }
  return limits;
}

Rat parse_threshold(const std::string& text) {
  try {
    Rat r = parse_rational(text);
    if (r < 0) throw UsageError("--r: threshold must be nonnegative");
    return r;
  } catch (const ParseError& e) {
    throw UsageError(std::string("--r: ") + e.what());
  }
}

std::string fmt7(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f", x);
  return buf;
}

std::string fmt_word(const std::vector<int>& word) {  // 0-based in, 1-based out
  std::string out = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(word[i] + 1);
  }
  return out + "]";
}

std::string fmt_int_list(const std::vector<Int>& xs) {
  std::string out = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i].str();
  }
  return out + "]";
}

std::string fmt_radius_clause(const RadiusVerdict& v, const Rat& r) {
  const char* cmp = v.ordering == Ordering::Less ? "<" : v.ordering == Ordering::Equal ? "=" : ">";
  return "radius " + std::string(cmp) + " " + Rat(r).str() + " (≈" + fmt7(v.approx) + ")";
}

// Shared by rmaximal and classify2: the three-way verdict rendered as text.
std::string fmt_rmaximal(const RMaximalVerdict& v, const Rat& r, std::size_t class_size, const std::string& type) {
  switch (v.state()) {
    case Tristate::No:
      return "NOT " + Rat(r).str() + "-maximal; witness mutation " + fmt_word(*v.witness_word) + "; " +
             fmt_radius_clause(*v.witness_verdict, r);
    case Tristate::Yes: {
      std::string out = Rat(r).str() + "-maximal";
      if (!type.empty()) out += "; type " + type;
      return out + "; class size " + std::to_string(class_size);
    }
    case Tristate::Unknown:
    default:
      return "UNKNOWN; search truncated without witness (visited " + std::to_string(class_size) + " quivers)";
  }
}

Json rmaximal_json(const RMaximalVerdict& v, const Rat& r, std::size_t class_size, const std::string& type) {
  Json out{{"threshold", Rat(r).str()},
           {"verdict", v.state() == Tristate::Yes ? "maximal" : v.state() == Tristate::No ? "not_maximal" : "unknown"},
           {"complete", v.complete},
           {"class_size", class_size}};
  if (!type.empty()) out["type"] = type;
  if (v.witness_word) {
    out["witness_word"] = json_word(*v.witness_word);
    out["witness"] = to_json(*v.witness_verdict, r);
  }
  return out;
}

struct Options {
  bool json = false;
  std::string file;
  std::string file2;  // cospectral only
  std::string seq;
  std::string vertices;
  std::string limits_text;
  std::string threshold_text = "2";
};

// Load a quiver and apply the --vertices / --seq preprocessing shared by the
// read-only verbs (mutate consumes --seq itself and is handled separately).
ValuedQuiver load_quiver(const Options& opt) {
  ValuedQuiver q = parse_quiver(read_file(opt.file));
  if (!opt.vertices.empty()) q = full_subquiver(q, parse_index_list(opt.vertices, "--vertices"));
  if (!opt.seq.empty()) {
    ExchangeMatrix b = exchange_matrix(q);
    q = quiver_from_matrix(mutate_seq(b, parse_index_list(opt.seq, "--seq")));
  }
  return q;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int run_validate(const Options& opt) {
  ValuedQuiver q = load_quiver(opt);
  std::vector<Int> d = validate(q);
  if (opt.json) {
    emit(to_json(q));
  } else {
    std::cout << "valid quiver: " << q.order() << " vertices, " << q.arrows().size() << " arrows\n"
              << "symmetrizer " << fmt_int_list(d) << "\n";
  }
  return 0;
}

int run_matrix(const Options& opt) {
  ValuedQuiver q = load_quiver(opt);
  ExchangeMatrix b = exchange_matrix(q);
  if (opt.json) {
    emit(Json{{"n", b.order()}, {"matrix", to_json(b.matrix())}, {"symmetrizer", json_int_list(b.symmetrizer())}});
  } else {
    for (int i = 0; i < b.order(); ++i) {
      for (int j = 0; j < b.order(); ++j) std::cout << (j ? " " : "") << b.entry(i, j).str();
      std::cout << "\n";
    }
  }
  return 0;
}

int run_mutate(const Options& opt) {
  if (opt.seq.empty()) throw UsageError("mutate requires --seq k1,k2,...");
  ValuedQuiver q = parse_quiver(read_file(opt.file));
  if (!opt.vertices.empty()) q = full_subquiver(q, parse_index_list(opt.vertices, "--vertices"));
  ExchangeMatrix b = mutate_seq(exchange_matrix(q), parse_index_list(opt.seq, "--seq"));
  ValuedQuiver out = quiver_from_matrix(b);
  if (opt.json)
    emit(to_json(out));
  else
    std::cout << serialize_quiver(out);
  return 0;
}

int run_charpoly(const Options& opt) {
  IntPolynomial f = exchange_char_poly(load_quiver(opt));
  if (opt.json)
    emit(Json{{"polynomial", to_json(f)}, {"display", f.to_string("λ")}});
  else
    std::cout << f.to_string("λ") << "\n";
  return 0;
}

int run_radius(const Options& opt) {
  Rat r = parse_threshold(opt.threshold_text);
  RadiusVerdict v = radius_cmp(load_quiver(opt), r);
  if (opt.json)
    emit(to_json(v, r));
  else
    std::cout << fmt_radius_clause(v, r) << "\n";
  return 0;
}

int run_acyclic(const Options& opt) {
  bool acyclic = is_acyclic(load_quiver(opt));
  if (opt.json)
    emit(Json{{"acyclic", acyclic}});
  else
    std::cout << (acyclic ? "acyclic\n" : "has an oriented cycle\n");
  return 0;
}

int run_cospectral(const Options& opt) {
  ValuedQuiver q1 = parse_quiver(read_file(opt.file));
  ValuedQuiver q2 = parse_quiver(read_file(opt.file2));
  bool same = cospectral(q1, q2);
  if (opt.json)
    emit(Json{{"cospectral", same},
              {"polynomials", Json::array({to_json(exchange_char_poly(q1)), to_json(exchange_char_poly(q2))})}});
  else
    std::cout << (same ? "cospectral\n" : "not cospectral\n");
  return 0;
}

int run_bounds(const Options& opt) {
  ValuedQuiver q = load_quiver(opt);
  BoundsReport rep = bounds_report(q);
  if (opt.json) {
    Json j{{"lambda", rep.lambda_approx}, {"mu", rep.mu_approx}, {"h", json_int(rep.h)}};
    if (rep.regular_witness) j["regular_witness"] = json_word(*rep.regular_witness);
    emit(j);
  } else {
    std::cout << "λ ≈ " << fmt7(rep.lambda_approx) << "; μ ≈ " << fmt7(rep.mu_approx) << "; h = " << rep.h.str()
              << "; ";
    if (rep.regular_witness) {
      std::cout << "regular component {";
      for (std::size_t i = 0; i < rep.regular_witness->size(); ++i)
        std::cout << (i ? ", " : "") << (*rep.regular_witness)[i] + 1;
      std::cout << "}\n";
    } else {
      std::cout << "no witness\n";
    }
  }
  return 0;
}

int run_mutclass(const Options& opt) {
  ClassLimits limits = parse_limits(opt.limits_text);
  MutationClass c = enumerate_class(exchange_matrix(load_quiver(opt)), limits);
  if (opt.json) {
    emit(to_json(c));
  } else {
    std::cout << "size " << c.members.size() << "\n"
              << "complete " << (c.complete ? "yes" : "no") << "\n"
              << "cospectral groups " << cospectral_partition(c).size() << "\n";
  }
  return 0;
}

int run_rmaximal(const Options& opt) {
  Rat r = parse_threshold(opt.threshold_text);
  ClassLimits limits = parse_limits(opt.limits_text);
  RMaximalSearch search = r_maximal_search(exchange_matrix(load_quiver(opt)), r, limits);
  if (opt.json)
    emit(rmaximal_json(search.verdict, r, search.cls.members.size(), ""));
  else
    std::cout << fmt_rmaximal(search.verdict, r, search.cls.members.size(), "") << "\n";
  return 0;
}

int run_classify2(const Options& opt) {
  ClassLimits limits = parse_limits(opt.limits_text);
  TwoMaximalResult res = classify_two_maximal(exchange_matrix(load_quiver(opt)), limits);
  if (opt.json)
    emit(rmaximal_json(res.verdict, Rat(2), res.class_size, res.type));
  else
    std::cout << fmt_rmaximal(res.verdict, Rat(2), res.class_size, res.type) << "\n";
  return 0;
}

int run_diagram(const Options& opt) {
  DiagramVerdict v = recognize_diagram(load_quiver(opt));
  if (opt.json) {
    Json j{{"kind", v.kind == DiagramKind::Dynkin        ? "Dynkin"
                    : v.kind == DiagramKind::ExtendedDynkin ? "ExtendedDynkin"
                                                            : "Neither"}};
    if (v.kind == DiagramKind::Neither)
      j["reason"] = v.reason;
    else
      j["name"] = v.name;
    emit(j);
  } else {
    if (v.kind == DiagramKind::Dynkin)
      std::cout << "Dynkin " << v.name << "\n";
    else if (v.kind == DiagramKind::ExtendedDynkin)
      std::cout << "extended Dynkin " << v.name << "\n";
    else
      std::cout << "neither: " << v.reason << "\n";
  }
  return 0;
}

int run_partition(const Options& opt) {
  ClassLimits limits = parse_limits(opt.limits_text);
  MutationClass c = enumerate_class(exchange_matrix(load_quiver(opt)), limits);
  std::vector<CospectralGroup> groups = cospectral_partition(c);
  if (opt.json) {
    Json out{{"complete", c.complete}, {"groups", Json::array()}};
    for (const CospectralGroup& g : groups) {
      Json keys = Json::array();
      for (const CanonicalKey& k : g.keys) keys.push_back(k);
      out["groups"].push_back(Json{{"polynomial", to_json(g.polynomial)}, {"keys", std::move(keys)}});
    }
    emit(out);
  } else {
    std::cout << "complete " << (c.complete ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < groups.size(); ++i)
      std::cout << "group " << i + 1 << ": size " << groups[i].keys.size() << ", polynomial "
                << groups[i].polynomial.to_string("λ") << "\n";
  }
  return 0;
}

int run_probe(const Options& opt) {
  ClassLimits limits = parse_limits(opt.limits_text);
  MutationClass c = enumerate_class(exchange_matrix(load_quiver(opt)), limits);
  ProbeReport rep = probe_conjecture(c);  // throws on incomplete class
  if (opt.json) {
    Json cands = Json::array();
    for (const auto& [a, b] : rep.candidates) cands.push_back(Json::array({a, b}));
    emit(Json{{"groups", rep.groups},
              {"verified_pairs", rep.verified_pairs},
              {"candidate_pairs", rep.candidate_pairs},
              {"candidates", std::move(cands)}});
  } else {
    std::cout << "groups " << rep.groups << "\n"
              << "verified pairs " << rep.verified_pairs << "\n"
              << "candidate pairs " << rep.candidate_pairs << "\n";
    for (const auto& [a, b] : rep.candidates) std::cout << "candidate: " << a << " | " << b << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spectral theory of valued quivers under mutation"};
  app.require_subcommand(1);

  Options opt;
  int (*handler)(const Options&) = nullptr;

  auto add_common = [&](CLI::App* sub, bool with_input = true) {
    sub->add_flag("--json", opt.json, "emit JSON instead of text");
    if (with_input) {
      sub->add_option("file", opt.file, "quiver file")->required();
      sub->add_option("--vertices", opt.vertices, "restrict to the full subquiver on these vertices (1-based)");
    }
    return sub;
  };
  auto add_seq = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--seq", opt.seq, "mutation sequence k1,k2,... (1-based)");
    if (required) o->required();
    return sub;
  };
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--limits", opt.limits_text, "search limits max_quivers=N,max_entry=N,max_depth=N");
    return sub;
  };
  auto add_r = [&](CLI::App* sub) {
    sub->add_option("--r", opt.threshold_text, "rational threshold (\"p/q\" or decimal), default 2");
    return sub;
  };

  auto wire = [&](CLI::App* sub, int (*fn)(const Options&)) { sub->callback([&, fn] { handler = fn; }); };

  wire(add_seq(add_common(app.add_subcommand("validate", "check well-formedness and print the symmetrizer")), false),
       run_validate);
  wire(add_seq(add_common(app.add_subcommand("matrix", "print the exchange matrix")), false), run_matrix);
  wire(add_seq(add_common(app.add_subcommand("mutate", "apply a mutation sequence and print the quiver")), true),
       run_mutate);
  wire(add_seq(add_common(app.add_subcommand("charpoly", "print the exchange characteristic polynomial")), false),
       run_charpoly);
  wire(add_r(add_seq(add_common(app.add_subcommand("radius", "compare the exchange spectrum radius to --r")), false)),
       run_radius);
  wire(add_seq(add_common(app.add_subcommand("acyclic", "decide whether the quiver has an oriented cycle")), false),
       run_acyclic);
  {
    CLI::App* sub = app.add_subcommand("cospectral", "compare the exchange polynomials of two quivers");
    sub->add_flag("--json", opt.json, "emit JSON instead of text");
    sub->add_option("file1", opt.file, "first quiver file")->required();
    sub->add_option("file2", opt.file2, "second quiver file")->required();
    wire(sub, run_cospectral);
  }
  wire(add_seq(add_common(app.add_subcommand("bounds", "report radius λ, adjacency radius μ and max degree h")), false),
       run_bounds);
  wire(add_limits(add_seq(add_common(app.add_subcommand("mutclass", "enumerate the mutation class up to isomorphism")),
                          false)),
       run_mutclass);
  wire(add_r(add_limits(add_seq(
           add_common(app.add_subcommand("rmaximal", "decide whether every class member has radius ≤ --r")), false))),
       run_rmaximal);
  wire(add_limits(add_seq(
           add_common(app.add_subcommand("classify2", "classify a connected cluster quiver as 2-maximal or not")),
           false)),
       run_classify2);
  wire(add_seq(add_common(app.add_subcommand("diagram", "recognize Dynkin / extended Dynkin tree quivers")), false),
       run_diagram);
  wire(add_limits(add_seq(
           add_common(app.add_subcommand("partition", "cospectral partition of the mutation class")), false)),
       run_partition);
  wire(add_limits(add_seq(add_common(app.add_subcommand("probe", "sink/source-connectivity probe on cospectral pairs")),
                          false)),
       run_probe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);      // prints help or the parse error
    return code == 0 ? 0 : 2;    // usage errors normalized to exit 2
  }

  try {
    return handler(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
