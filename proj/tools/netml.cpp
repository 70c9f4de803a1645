// netml: command-line front end for nets of conics.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "netml/netml.hpp"

namespace {

using namespace netml;

enum ExitCode { kOk = 0, kFailure = 1, kFormat = 2, kRegularity = 3, kGenericity = 4 };

struct Options {
  std::string format = "md";
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  std::string net_path;
  std::string type_name;
  std::string g = "1";
  std::string c = "1";
  bool g_given = false;
};

bool json_out(const Options& o) { return o.format == "json"; }

Net load_net(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_net(text);
}

void print_ml(const Options& o, const std::string& name, const MLResult& r) {
  if (json_out(o)) {
    std::cout << to_json_value(r).dump(2) << '\n';
    return;
  }
  std::cout << name << ": " << r.value << "\n\nsamples used: " << r.samples_used << "\nper-sample counts:";
  for (long c : r.per_sample_counts) std::cout << ' ' << c;
  std::cout << "\nstable: " << (r.stable ? "yes" : "no") << '\n';
}

// Generator as given, without rescaling.
std::string form_string_raw(const Sym3& s) {
  std::string out;
  for (char ch : to_string(conic_form(s))) {
    if (ch != '*') out.push_back(ch);
  }
  return out;
}

void print_net_md(const Net& l) {
  for (std::size_t i = 0; i < 3; ++i) std::cout << "S" << i + 1 << " = " << form_string_raw(l[i]) << '\n';
}

int cmd_classify(const Options& o) {
  Net l = load_net(o.net_path);
  Fingerprint f = fingerprint(l, true, o.seed);
  auto t = classify(f);
  if (json_out(o)) {
    std::cout << json{{"type", type_json(t)}, {"fingerprint", to_json_value(f)}}.dump(2) << '\n';
  } else {
    std::cout << "type: " << (t ? tag_name(*t) : "UNKNOWN") << '\n';
  }
  return kOk;
}

int cmd_report(const Options& o) {
  Net l = load_net(o.net_path);
  NetReport r = report(l, o.samples, o.seed);
  if (json_out(o)) {
    std::cout << to_json_value(r).dump(2) << '\n';
    return kOk;
  }
  std::cout << "# Net report\n\n";
  print_net_md(l);
  std::cout << "\ntype: " << (r.type ? tag_name(*r.type) : "UNKNOWN") << "\nregular: " << (r.regular ? "yes" : "no") << '\n';
  if (!r.regular) return kOk;
  std::cout << "deg PL^-1: " << r.deg_recip << "\nspan codim: " << r.span_codim
            << "\nprojection center: " << center_name(r.center->center)
            << "\nsingular reciprocal surface: " << (r.center->singular ? "yes" : "no")
            << "\nML-base locus: " << base_locus_string(*r.base_locus) << " (dim " << r.base_locus->dimension << ", deg "
            << r.base_locus->degree << ")\nmld: " << r.mld->value << "\nrmld: " << r.rmld->value << "\nmld via geometry: ";
  if (r.mld_geometry->value) {
    std::cout << *r.mld_geometry->value;
  } else {
    std::cout << "not applicable (bound " << *r.mld_geometry->bound << ")";
  }
  std::cout << "\nrelation: rmld " << relation_symbol(*r.relation) << " deg + mld - 1\nannihilator:";
  if (r.annihilator_basis.empty()) std::cout << " none";
  for (std::size_t i = 0; i < r.annihilator_basis.size(); ++i) {
    std::cout << (i ? ", " : " ") << form_string(r.annihilator_basis[i]);
  }
  std::cout << '\n';
  return kOk;
}

int cmd_tables(const Options& o) {
  auto rows = table_rows(o.seed, o.samples);
  if (json_out(o)) {
    std::cout << tables_json(rows).dump(2) << '\n';
  } else {
    std::cout << tables_markdown(rows);
  }
  return kOk;
}

int cmd_recip_ideal(const Options& o) {
  Net l = load_net(o.net_path);
  Ideal r = reciprocal_ideal(l);
  HilbertData h = hilbert(r);
  if (json_out(o)) {
    std::cout << json{{"generators", ideal_json(r)}, {"dimension", h.dimension}, {"degree", h.degree}}.dump(2) << '\n';
    return kOk;
  }
  std::cout << "reciprocal ideal (reduced grevlex basis):\n";
  for (const auto& g : groebner_basis(r, MonomialOrder::grevlex())) std::cout << "  " << to_string(g) << '\n';
  std::cout << "dimension: " << h.dimension << "\ndegree: " << h.degree << '\n';
  return kOk;
}

int cmd_base_locus(const Options& o) {
  Net l = load_net(o.net_path);
  BaseLocusReport b = base_locus(l);
  if (json_out(o)) {
    std::cout << to_json_value(b).dump(2) << '\n';
    return kOk;
  }
  std::cout << "ML-base locus: " << base_locus_string(b) << "\ndimension: " << b.dimension << "\ndegree: " << b.degree
            << "\nreduced: " << (b.reduced ? "yes" : "no") << '\n';
  for (const auto& p : b.support) std::cout << "  " << form_string(p.point) << "  rank " << p.rank << '\n';
  return kOk;
}

int cmd_canonical(const Options& o) {
  WallTag t = parse_tag(o.type_name);
  WallType w = WallType::of(t);
  if (t == WallTag::A) {
    w = WallType::a(parse_rat(o.g), parse_rat(o.c));
  } else if (o.g_given) {
    throw ParameterError("--g/--c apply to type A only");
  }
  Net l = canonical_net(w);
  if (json_out(o)) {
    std::cout << to_json_value(l).dump(2) << '\n';
  } else {
    std::cout << "type " << w.name() << "\n\n";
    print_net_md(l);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of nets of conics"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"md", "json"}))->capture_default_str();
  app.add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
  app.add_option("--samples", o.samples, "Samples per ML-degree count")->capture_default_str()->check(CLI::PositiveNumber);
  app.fallthrough();

  std::function<int(const Options&)> run;
  auto net_command = [&](const std::string& name, const std::string& help, int (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("net", o.net_path, "Net JSON file ('-' for stdin)")->required();
    sub->callback([&run, fn] { run = fn; });
  };
  net_command("classify", "Wall type by invariant fingerprint", cmd_classify);
  net_command("report", "Full invariant report", cmd_report);
  net_command("mld", "ML-degree", [](const Options& opt) {
    print_ml(opt, "mld", mld(load_net(opt.net_path), opt.samples, opt.seed));
    return static_cast<int>(kOk);
  });
  net_command("rmld", "Reciprocal ML-degree", [](const Options& opt) {
    print_ml(opt, "rmld", rmld(load_net(opt.net_path), opt.samples, opt.seed));
    return static_cast<int>(kOk);
  });
  net_command("recip-ideal", "Ideal of the reciprocal surface", cmd_recip_ideal);
  net_command("base-locus", "ML-base locus", cmd_base_locus);
  auto* tables = app.add_subcommand("tables", "Reproduce Tables 1, 2 and 4");
  tables->callback([&run] { run = cmd_tables; });
  auto* canon = app.add_subcommand("canonical", "Canonical representative of a type");
  canon->add_option("type", o.type_name, "A, B, B*, ..., I*")->required();
  auto* gopt = canon->add_option("--g", o.g, "Type A parameter g");
  auto* copt = canon->add_option("--c", o.c, "Type A parameter c");
  canon->callback([&] {
    o.g_given = gopt->count() > 0 || copt->count() > 0;
    run = cmd_canonical;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  try {
    return run(o);
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << '\n';
    return kFormat;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << '\n';
    return kFormat;
  } catch (const RegularityError& e) {
    std::cerr << "regularity required: " << e.what() << '\n';
    return kRegularity;
  } catch (const GenericityError& e) {
    std::cerr << "genericity failure: " << e.what() << '\n';
    return kGenericity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
