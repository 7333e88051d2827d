#include "gprod/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include <gprod/special_subgroups.hpp>
#include <gprod/splitting.hpp>
#include <gprod/verification.hpp>

#include "gprod/config.hpp"

namespace gprod::cli {

namespace {

struct Options {
  std::string config_path;
  std::string word;
  std::string word2;
  std::string set;
  std::string vertex;
  std::string suite;
  std::string out_path;
  std::size_t radius = 0;
  std::size_t limit = GraphProduct::kDefaultBallLimit;
  bool pad = false;
};

using Handler = std::function<int(const Loaded&, const Options&, std::ostream&, std::ostream&)>;

int normalize(const Loaded& l, const Options& o, std::ostream& out, std::ostream&) {
  out << l.product().format(l.product().parse(o.word)) << '\n';
  return kSuccess;
}

int eq(const Loaded& l, const Options& o, std::ostream& out, std::ostream&) {
  const GraphProduct& g = l.product();
  out << (g.equals(g.parse(o.word), g.parse(o.word2)) ? "true" : "false") << '\n';
  return kSuccess;
}

int lengths(const Loaded& l, const Options& o, std::ostream& out, std::ostream&) {
  const GraphProduct& g = l.product();
  NormalForm x = g.parse(o.word);
  out << "word_length=" << g.word_length(x) << '\n'
      << "syllable_length=" << g.syllable_length(x) << '\n';
  return kSuccess;
}

int retract_cmd(const Loaded& l, const Options& o, std::ostream& out, std::ostream&) {
  const GraphProduct& g = l.product();
  out << g.format(retract(g, g.parse(o.word), l.graph.parse_set(o.set))) << '\n';
  return kSuccess;
}

int coset_rep_cmd(const Loaded& l, const Options& o, std::ostream& out, std::ostream&) {
  const GraphProduct& g = l.product();
  VertexSet star = l.graph.star(l.graph.index(o.vertex));
  out << g.format(coset_rep(g, g.parse(o.word), star)) << '\n';
  return kSuccess;
}

int beta_cmd(const Loaded& l, const Options& o, std::ostream& out, std::ostream&) {
  out << l.action.serialize(l.action.beta(l.product().parse(o.word)));
  return kSuccess;
}

int verify(const Loaded& l, const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<Suite> suite = parse_suite(o.suite);
  if (!suite) {
    err << "error: unknown suite '" << o.suite << "' (cocycle, norm, lengths, cosets)\n";
    return kUsageError;
  }
  SuiteResult r = run_suite(l.action, *suite, o.radius, o.limit);
  if (r.passed) {
    out << "PASS " << r.checks << " checks\n";
    return kSuccess;
  }
  out << "FAIL after " << r.checks << " checks: " << r.failure << '\n';
  return kVerificationFailed;
}

int decompose_cmd(const Loaded& l, const Options& o, std::ostream& out, std::ostream&) {
  const GraphProduct& g = l.product();
  Vertex v = l.graph.index(o.vertex);
  KernelDecomposition d = decompose(g, g.parse(o.word), v);
  for (const KernelFactor& f : d.factors)
    out << "factor tag=\"" << g.format(f.tag) << "\" element=" << g.group(v).format_element(f.element)
        << '\n';
  out << "quotient=\"" << g.format(d.quotient) << "\"\n"
      << "kernel_length=" << kernel_length(g, d) << '\n';
  return kSuccess;
}

int adim(const Loaded& l, const Options&, std::ostream& out, std::ostream&) {
  out << adim_bound(l.graph, l.adims()) << '\n';
  return kSuccess;
}

int alpha_bounds(const Loaded& l, const Options&, std::ostream& out, std::ostream&) {
  CompressionInterval c = alpha_eq_bounds(l.graph, l.alphas(), l.orders(), l.config.p);
  out << "lower=" << format_decimal(c.lower) << " upper=" << format_decimal(c.upper)
      << (c.exact() ? " exact" : "") << '\n';
  return kSuccess;
}

int alpha_noneq_cmd(const Loaded& l, const Options&, std::ostream& out, std::ostream&) {
  out << format_decimal(alpha_noneq(l.alphas())) << '\n';
  return kSuccess;
}

int scan(const Loaded& l, const Options& o, std::ostream& out, std::ostream& err) {
  CompressionScan s = compression_scan(l.action, o.radius, o.limit);
  std::ofstream file(o.out_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << o.out_path << "'\n";
    return kUsageError;
  }
  write_scan_csv(file, l.product(), s);
  out << "rows=" << s.rows.size() << " exponent=" << format_decimal(s.exponent)
      << (s.degenerate ? " degenerate" : "") << '\n';
  return kSuccess;
}

int factors(const Loaded& l, const Options&, std::ostream& out, std::ostream&) {
  for (VertexSet f : l.graph.join_factors()) out << l.graph.format_set(f) << '\n';
  return kSuccess;
}

int profile(const Loaded& l, const Options& o, std::ostream& out, std::ostream&) {
  std::optional<ProductAction> padded;
  if (o.pad) padded = l.action.pad_for_properness();
  const ProductAction& action = padded ? *padded : l.action;
  for (const ProfileRow& r : properness_profile(action, o.radius, o.limit))
    out << "n=" << r.length << " sphere=" << r.sphere_size << " min_norm^p=" << r.min_pow.str()
        << " min_norm=" << format_decimal(r.min_norm) << " witness=\""
        << action.product().format(r.witness) << "\"\n";
  return kSuccess;
}

int free_subgroup(const Loaded& l, const Options&, std::ostream& out, std::ostream&) {
  std::optional<FreeSubgroupWitness> w = has_free_subgroup(l.graph, l.orders());
  out << (w ? describe(l.graph, *w) : std::string("none")) << '\n';
  return kSuccess;
}

int show_config(const Loaded& l, const Options&, std::ostream& out, std::ostream&) {
  out << serialize_config(l.config);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph products of groups: normal forms, cocycles and invariants", "gprod"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--config", o.config_path, "product configuration (JSON)")->required();

  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto word = [&](CLI::App* sub) { sub->add_option("word", o.word, "word, e.g. 'a:3 b:-1'")->required(); };
  auto radius = [&](CLI::App* sub) {
    sub->add_option("--radius", o.radius, "ball radius in l_X")->required();
    sub->add_option("--limit", o.limit, "element budget for ball enumeration");
  };

  word(add("normalize", "print the normal form", normalize));
  {
    CLI::App* sub = add("eq", "decide equality of two words", eq);
    sub->add_option("w1", o.word, "first word")->required();
    sub->add_option("w2", o.word2, "second word")->required();
  }
  word(add("lengths", "print l_X and syllable length", lengths));
  {
    CLI::App* sub = add("retract", "retraction onto a special subgroup", retract_cmd);
    sub->add_option("--set", o.set, "comma-separated vertex names")->required();
    word(sub);
  }
  {
    CLI::App* sub = add("coset-rep", "representative of g G_st(v)", coset_rep_cmd);
    sub->add_option("--vertex", o.vertex, "vertex name")->required();
    word(sub);
  }
  word(add("beta", "serialized cocycle value and norm", beta_cmd));
  {
    CLI::App* sub = add("verify", "exhaustive property suite on a ball", verify);
    sub->add_option("--suite", o.suite, "cocycle | norm | lengths | cosets")->required();
    radius(sub);
  }
  {
    CLI::App* sub = add("decompose", "kernel decomposition at a vertex", decompose_cmd);
    sub->add_option("--vertex", o.vertex, "vertex name")->required();
    word(sub);
  }
  add("adim-bound", "asymptotic dimension bound", adim);
  add("alpha-bounds", "equivariant compression interval", alpha_bounds);
  add("alpha-noneq", "non-equivariant compression", alpha_noneq_cmd);
  {
    CLI::App* sub = add("scan", "compression scan to CSV", scan);
    radius(sub);
    sub->add_option("--out", o.out_path, "CSV output path")->required();
  }
  add("factors", "join decomposition", factors);
  {
    CLI::App* sub = add("profile", "sphere minima of the cocycle norm", profile);
    radius(sub);
    sub->add_flag("--pad", o.pad, "pad the cocycles for properness first");
  }
  add("free-subgroup", "free subgroup witness", free_subgroup);
  add("show-config", "print the normalized configuration", show_config);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsageError;
  }

  try {
    Loaded loaded = build(load_config(o.config_path));
    for (const auto& [sub, handler] : commands)
      if (sub->parsed()) return handler(loaded, o, out, err);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  err << app.help();
  return kUsageError;
}

}  // namespace gprod::cli
