#include "heegaard/cli.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "heegaard/classify.hpp"
#include "heegaard/complexes.hpp"
#include "heegaard/farey.hpp"
#include "heegaard/fgroup.hpp"
#include "heegaard/goeritz.hpp"
#include "heegaard/surgery.hpp"
#include "json.hpp"

namespace heegaard::cli {

namespace {

using nlohmann::json;

struct WordsArgs {
  int p1 = 0, q1 = 0, p2 = 0, q2 = 1;
  std::optional<int> index;
  std::string format = "text";
};

int cmd_words(const WordsArgs& a, std::ostream& out) {
  const surgery::SplittingParams params{a.p1, a.q1, a.p2, a.q2};
  params.validate();
  std::vector<std::pair<int, fgroup::CyclicWord>> rows;
  if (a.index) {
    rows.emplace_back(*a.index, surgery::surgery_word(params, *a.index));
  } else {
    int i = 1;
    for (auto& w : surgery::surgery_sequence(params)) rows.emplace_back(i++, std::move(w));
  }
  if (a.format == "json") {
    json records = json::array();
    for (const auto& [i, w] : rows) records.push_back({{"i", i}, {"word", w.to_string()}});
    out << (a.index ? records.front() : records).dump() << '\n';
  } else {
    for (const auto& [i, w] : rows) out << w.to_string() << '\n';
  }
  return kExitOk;
}

std::string reason_text(fgroup::CriterionReason r) {
  switch (r) {
    case fgroup::CriterionReason::MixedSignX: return "contains x and X";
    case fgroup::CriterionReason::MixedSignY: return "contains y and Y";
    case fgroup::CriterionReason::BothSquares: return "contains a square of x and a square of y";
    case fgroup::CriterionReason::None: break;
  }
  return "";
}

int cmd_primitive(const std::string& text, const std::string& format, std::ostream& out) {
  using Kind = fgroup::PrimitivityVerdict::Kind;
  const fgroup::Word w = fgroup::Word::parse(text);
  const fgroup::CyclicWord c = fgroup::cyclic_canonical(w);
  const fgroup::CriterionResult criterion = fgroup::sign_square_criterion(c);
  const fgroup::PrimitivityVerdict v = fgroup::primitive_power_root(w);

  std::string verdict, how;
  switch (v.kind) {
    case Kind::Trivial:
      verdict = "trivial";
      how = "free reduction: reduces to 1";
      break;
    case Kind::Primitive:
      verdict = "primitive";
      how = "whitehead: reduces to a single letter";
      break;
    case Kind::PowerOfPrimitive:
      verdict = "power-of-primitive(" + v.root.to_string() + ", " + std::to_string(v.exponent) + ")";
      how = "whitehead: periodic word with primitive root";
      break;
    case Kind::Neither:
      verdict = "neither";
      if (criterion.verdict == fgroup::CriterionVerdict::NotTrivialNotPrimitivePower) {
        how = "sign-square criterion: " + reason_text(criterion.reason);
      } else {
        how = "whitehead: root of cyclic length " +
              std::to_string(fgroup::whitehead_minimize(w).size()) + " after reduction";
      }
      break;
  }

  if (format == "json") {
    json j{{"word", c.to_string()}, {"verdict", verdict}, {"criterion", how}};
    if (v.kind == Kind::Primitive || v.kind == Kind::PowerOfPrimitive) {
      j["root"] = v.root.to_string();
      j["exponent"] = v.exponent;
    }
    out << j.dump() << '\n';
  } else {
    out << verdict << " (" << how << ")\n";
  }
  return kExitOk;
}

int cmd_classify(const std::string& m1, const std::string& m2, const std::string& format,
                 std::ostream& out) {
  const auto a = classify::parse_summand(m1);
  const auto b = classify::parse_summand(m2);
  if (format == "json") {
    out << classify::classification_json(a, b).dump() << '\n';
    return kExitOk;
  }
  out << "count: " << classify::surface_count(a, b) << '\n';
  int k = 1;
  for (const auto& d : classify::splittings(a, b)) {
    out << "splitting " << k++ << ": case " << classify::to_string(d.splitting_case) << ", "
        << (d.symmetric ? "symmetric" : "not symmetric") << '\n';
  }
  return kExitOk;
}

struct GoeritzArgs {
  std::string case_name;
  std::optional<std::string> normal_form;
  bool abelianization = false;
  std::string format = "text";
};

int cmd_goeritz(const GoeritzArgs& a, std::ostream& out) {
  const goeritz::Case c = goeritz::parse_case(a.case_name);
  const bool as_json = a.format == "json";
  if (a.normal_form) {
    const goeritz::Word nf = goeritz::normal_form(c, goeritz::parse_word(*a.normal_form));
    if (as_json) {
      out << json{{"case", a.case_name}, {"input", *a.normal_form}, {"normal_form", goeritz::to_string(nf)}}.dump()
          << '\n';
    } else {
      out << goeritz::to_string(nf) << '\n';
    }
  }
  if (a.abelianization) {
    const auto inv = goeritz::abelianization(goeritz::goeritz_presentation(c));
    if (as_json) {
      out << json{{"free_rank", inv.free_rank}, {"torsion", inv.torsion}}.dump() << '\n';
    } else {
      out << goeritz::to_string(inv) << '\n';
    }
  }
  if (!a.normal_form && !a.abelianization) {
    const auto p = goeritz::goeritz_presentation(c);
    out << (as_json ? goeritz::to_json(p).dump() : goeritz::to_text(p)) << '\n';
  }
  return kExitOk;
}

void print_counts(const complexes::Complex& c, std::ostream& out) {
  out << "vertices: " << c.vertex_count() << '\n'
      << "edges: " << c.edge_count() << '\n'
      << "triangles: " << c.triangles().size() << '\n';
}

void export_complex(const complexes::Complex& c, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << complexes::to_json(c).dump() << '\n';
  } else {
    out << complexes::to_dot(c);
  }
}

struct FareyArgs {
  int max_depth = 0;
  bool odd = false;
  bool check_tree = false;
  std::string format = "text";
};

int cmd_farey(const FareyArgs& a, std::ostream& out) {
  complexes::Complex ball = farey::stern_brocot_ball(a.max_depth);
  if (a.odd) ball = farey::f_odd_subcomplex(ball);

  if (a.check_tree) {
    const bool forest = complexes::is_forest(ball) && !complexes::has_triangle_clique(ball);
    const bool connected = a.odd ? farey::odd_vertices_not_connected_to_infinity(a.max_depth).empty()
                                 : complexes::is_connected(ball);
    if (a.format == "json") {
      out << json{{"forest", forest}, {"connected", connected}}.dump() << '\n';
    } else {
      out << "forest: " << (forest ? "true" : "false") << '\n'
          << "connected: " << (connected ? "true" : "false") << '\n';
    }
    return forest && connected ? kExitOk : kExitViolation;
  }
  if (a.format == "text") {
    print_counts(ball, out);
  } else {
    export_complex(ball, a.format, out);
  }
  return kExitOk;
}

struct SphereArgs {
  std::optional<int> blacks, whites, depth, cone;
  std::string format = "text";
};

int cmd_sphere_complex(const SphereArgs& a, std::ostream& out, std::ostream& err) {
  if (a.cone) {
    const complexes::Complex c = complexes::sp_cone_model(*a.cone);
    const bool ok = complexes::is_cone_over_tree(c, 0);
    if (a.format == "text") {
      print_counts(c, out);
      out << "cone: " << (ok ? "true" : "false") << '\n';
    } else {
      export_complex(c, a.format, out);
    }
    return ok ? kExitOk : kExitViolation;
  }
  if (!a.blacks || !a.whites || !a.depth) {
    err << "sphere-complex: --blacks, --whites-per-black and --farey-depth are required without --cone\n";
    return kExitUsage;
  }
  const auto model = complexes::haken_complex_model({*a.blacks, *a.whites, *a.depth});
  const bool ok = complexes::is_tree(model.complex);
  if (a.format == "text") {
    print_counts(model.complex, out);
    out << "tree: " << (ok ? "true" : "false") << '\n';
  } else {
    export_complex(model.complex, a.format, out);
  }
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of genus-two Heegaard splittings of non-prime 3-manifolds", "heegaard"};
  app.require_subcommand(1);

  const auto text_json = CLI::IsMember({"text", "json"});
  const auto text_json_dot = CLI::IsMember({"text", "json", "dot"});

  WordsArgs words;
  auto* words_cmd = app.add_subcommand("words", "Boundary words of the disk surgery sequence");
  words_cmd->add_option("--p1", words.p1, "order of the first lens summand")->required();
  words_cmd->add_option("--q1", words.q1, "second parameter of the first lens summand")->required();
  words_cmd->add_option("--p2", words.p2, "order of the second lens summand")->required();
  words_cmd->add_option("--q2", words.q2, "second parameter of the second lens summand");
  words_cmd->add_option("--index", words.index, "print only the i-th word");
  words_cmd->add_option("--format", words.format)->check(text_json);

  std::string word_text;
  std::string primitive_format = "text";
  auto* primitive_cmd = app.add_subcommand("primitive", "Classify a word of F(x,y)");
  primitive_cmd->add_option("word", word_text, "word over x, y, X, Y")->required();
  primitive_cmd->add_option("--format", primitive_format)->check(text_json);

  std::string m1, m2, classify_format = "text";
  auto* classify_cmd = app.add_subcommand("classify", "Count genus-two Heegaard surfaces of M1 # M2");
  classify_cmd->add_option("--m1", m1, "lens:p,q or s2xs1")->required();
  classify_cmd->add_option("--m2", m2, "lens:p,q or s2xs1")->required();
  classify_cmd->add_option("--format", classify_format)->check(text_json);

  GoeritzArgs goeritz_args;
  auto* goeritz_cmd = app.add_subcommand("goeritz", "Goeritz group presentations and word problem");
  goeritz_cmd->add_option("--case", goeritz_args.case_name, "1a, 1b or 2")->required();
  goeritz_cmd->add_option("--normal-form", goeritz_args.normal_form, "word, e.g. \"d b d\"");
  goeritz_cmd->add_flag("--abelianization", goeritz_args.abelianization);
  goeritz_cmd->add_option("--format", goeritz_args.format)->check(text_json);

  FareyArgs farey_args;
  auto* farey_cmd = app.add_subcommand("farey", "Finite balls of the Farey complex");
  farey_cmd->add_option("--max-depth", farey_args.max_depth, "rounds of mediant insertion")
      ->required()
      ->check(CLI::Range(0, 16));
  farey_cmd->add_flag("--odd", farey_args.odd, "restrict to odd-numerator slopes");
  farey_cmd->add_flag("--check-tree", farey_args.check_tree, "check forest and connectivity");
  farey_cmd->add_option("--format", farey_args.format)->check(text_json_dot);

  SphereArgs sphere;
  auto* sphere_cmd = app.add_subcommand("sphere-complex", "Truncated Haken-sphere and cone models");
  sphere_cmd->add_option("--blacks", sphere.blacks)->check(CLI::PositiveNumber);
  sphere_cmd->add_option("--whites-per-black", sphere.whites)->check(CLI::PositiveNumber);
  sphere_cmd->add_option("--farey-depth", sphere.depth)->check(CLI::NonNegativeNumber);
  sphere_cmd->add_option("--cone", sphere.cone, "cone over a base tree of this size")
      ->check(CLI::PositiveNumber);
  sphere_cmd->add_option("--format", sphere.format)->check(text_json_dot);

  std::vector<const char*> argv{"heegaard"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (words_cmd->parsed()) return cmd_words(words, out);
    if (primitive_cmd->parsed()) return cmd_primitive(word_text, primitive_format, out);
    if (classify_cmd->parsed()) return cmd_classify(m1, m2, classify_format, out);
    if (goeritz_cmd->parsed()) return cmd_goeritz(goeritz_args, out);
    if (farey_cmd->parsed()) return cmd_farey(farey_args, out);
    if (sphere_cmd->parsed()) return cmd_sphere_complex(sphere, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace heegaard::cli
