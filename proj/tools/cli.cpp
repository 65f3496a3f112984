#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "poolshot/classify.hpp"
#include "poolshot/corpus.hpp"
#include "poolshot/error.hpp"
#include "poolshot/oracle.hpp"
#include "poolshot/prover.hpp"
#include "poolshot/tower.hpp"

namespace poolshot::cli {

namespace {

Point2 pt(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }

std::string join_points(const std::vector<Point2>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : " ") + std::string("(") + to_string(p.x) + ", " + to_string(p.y) + ")";
  return s;
}

std::vector<std::pair<Angle, Angle>> parse_asg_choice(const std::string& text) {
  if (text.empty() || text == "all") return assignment_choices();
  if (text.size() != 2) throw DomainError("assignment is two letters such as XY");
  Angle a = angle_from_char(text[0]), b = angle_from_char(text[1]);
  if (a == b) throw DomainError("assignment letters must differ");
  return {{a, b}};
}

AngleAssignment single_asg(const CodeSequence& code, const std::string& text) {
  auto ch = parse_asg_choice(text.empty() ? "XY" : text);
  if (ch.size() != 1) throw DomainError("give one assignment such as XY");
  return assign_angles(code, ch[0].first, ch[0].second);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write '" + path + "'");
  f << text;
}

void print_classify(const CodeSequence& code, std::ostream& out) {
  CodeType t = classify_code(code);
  out << "code " << format_code(code) << "\n";
  out << "alphabet " << alphabet(code).letters << "\n";
  out << "type " << to_string(t) << "\n";
  for (auto [a, b] : assignment_choices()) {
    AngleAssignment asg = assign_angles(code, a, b);
    StabilityDefect d = stability_defect(code, asg);
    out << "assignment " << asg.to_string() << ": defect (" << d.dX << ", " << d.dY << ", " << d.dZ << ")";
    if (auto line = unstable_line(d)) out << " line " << line->to_string();
    if (theta_solvable(t))
      if (auto th = solve_theta(code, asg)) out << " theta " << th->to_string();
    out << "\n";
    BoundingPolygon bp = angle_bounding_polygon(code, asg);
    if (bp.empty()) out << "  polygon empty\n";
    else out << "  polygon " << join_points(bp.vertices) << "\n";
  }
}

int cmd_cover(const std::vector<Point2>& target, const std::string& corpus_path, const CoverOptions& opt,
              const std::string& output, const std::string& svg, std::ostream& out, std::ostream& err) {
  std::vector<CodeSequence> codes;
  if (!corpus_path.empty()) codes = corpus_codes(load_corpus(corpus_path));
  CoverResult r = cover(target, codes, opt);
  if (!output.empty()) write_text(output, write_cover(r));
  if (!svg.empty()) write_text(svg, render_cover_svg(r));
  const auto& s = r.stats;
  out << "squares " << s.squares << "\ntriples " << s.triples << "\nfailures " << s.failures << "\nmax depth "
      << s.max_depth << "\nmin margin " << (s.min_margin ? to_string(*s.min_margin) : "none") << "\nescalations "
      << s.escalations << "\ncertify calls " << s.certify_calls << "\n";
  if (r.complete()) {
    out << "cover complete\n";
    return kOk;
  }
  err << "cover incomplete; uncovered nodes:\n";
  for (const auto& rec : r.records)
    if (rec.kind == RecordKind::Failure)
      err << "  center (" << to_string(rec.square.cx) << ", " << to_string(rec.square.cy) << ") radius "
          << to_string(rec.square.r) << " path " << (rec.path.empty() ? "-" : rec.path) << "\n";
  return kIncomplete;
}

}  // namespace

const std::vector<RegionPreset>& region_presets() {
  static const std::vector<RegionPreset> presets = {
      {"strip-75-80", {pt("37.5", "37.5"), pt("40", "40"), pt("12.5", "67.5"), pt("7.5", "67.5")},
       "largest angle between 100 and 105 degrees, x <= y, away from the corner"},
      {"strip-112.3", {pt("0", "67.7"), pt("33.85", "33.85"), pt("40", "40"), pt("0", "80")},
       "x + y between 67.7 and 80 with x <= y; needs a corpus of your own"},
      {"acute-demo", {pt("59.5", "59.5"), pt("60.5", "59.5"), pt("60.5", "60.5"), pt("59.5", "60.5")},
       "one-degree square around the equilateral triangle"},
  };
  return presets;
}

std::vector<Point2> resolve_region(const std::string& spec) {
  for (const auto& p : region_presets())
    if (p.name == spec) return p.vertices;
  std::ifstream f(spec);
  if (!f) throw DomainError("unknown region '" + spec + "': not a preset and not a readable file");
  std::vector<Point2> vs;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra)) throw ParseError("expected 'x y'", lineno);
    vs.push_back({parse_rational(a), parse_rational(b)});
  }
  if (vs.size() < 3) throw DomainError("region needs at least three vertices");
  return vs;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic billiard paths in triangles: codes, towers and square covers"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  // classify
  std::vector<std::string> code_words;
  auto* classify = app.add_subcommand("classify", "type, stability defect, theta, line and polygon of a code");
  classify->add_option("code", code_words, "code numbers")->required();

  // verify-corpus
  std::string corpus_path;
  auto* verify = app.add_subcommand("verify-corpus", "check every line of a corpus file");
  verify->add_option("corpus", corpus_path, "corpus file")->required();

  // cover
  std::string region = "strip-75-80", output, svg;
  int digits = 7, max_depth = 20, threads = 1;
  bool no_triples = false;
  auto* cov = app.add_subcommand("cover", "cover a region of triangle space with certified squares");
  cov->add_option("--region", region, "preset (strip-75-80, strip-112.3, acute-demo) or vertex file")
      ->capture_default_str();
  cov->add_option("--corpus", corpus_path, "corpus file; empty means no codes");
  cov->add_option("--precision", digits, "decimal digits, at least 7")->capture_default_str();
  cov->add_option("--max-depth", max_depth, "subdivision depth limit")->capture_default_str();
  cov->add_option("--threads", threads, "worker threads")->capture_default_str();
  cov->add_option("--output,-o", output, "cover file");
  cov->add_option("--svg", svg, "map of the cover");
  cov->add_flag("--no-triples", no_triples, "do not close line neighbourhoods with the triple rule");

  // unfold
  std::string xs, ys, asg_text;
  auto* unf = app.add_subcommand("unfold", "build the tower of a code at a triangle and run the tests");
  unf->add_option("code", code_words, "code numbers")->required();
  unf->add_option("--x", xs, "angle at A in degrees")->required();
  unf->add_option("--y", ys, "angle at B in degrees")->required();
  unf->add_option("--asg", asg_text, "first two assignment letters, e.g. XY")->capture_default_str();
  unf->add_option("--precision", digits, "decimal digits")->capture_default_str();
  unf->add_option("--svg", svg, "tower drawing");

  // certify
  std::string cx, cy, rad;
  auto* cert = app.add_subcommand("certify", "mean value test of a code region over a square");
  cert->add_option("code", code_words, "code numbers")->required();
  cert->add_option("--x", cx, "square center x")->required();
  cert->add_option("--y", cy, "square center y")->required();
  cert->add_option("--r", rad, "half side")->required();
  cert->add_option("--asg", asg_text, "assignment letters, or all")->capture_default_str();
  cert->add_option("--precision", digits, "decimal digits")->capture_default_str();

  // trace
  int side = 1, bounces = 20;
  double t = 0.5, dir = 90;
  auto* tr = app.add_subcommand("trace", "follow a billiard ball in floating point");
  tr->add_option("--x", xs, "angle at A")->required();
  tr->add_option("--y", ys, "angle at B")->required();
  tr->add_option("--side", side, "start side 1, 2 or 3")->capture_default_str();
  tr->add_option("--t", t, "position along the side in (0, 1)")->capture_default_str();
  tr->add_option("--dir", dir, "degrees from the side direction")->capture_default_str();
  tr->add_option("--bounces", bounces, "bounce limit")->capture_default_str();

  // find-orbit
  unsigned seed = 0;
  auto* fo = app.add_subcommand("find-orbit", "search for a periodic path with the code by simulation");
  fo->add_option("code", code_words, "code numbers")->required();
  fo->add_option("--x", xs, "angle at A")->required();
  fo->add_option("--y", ys, "angle at B")->required();
  fo->add_option("--asg", asg_text, "restrict to one assignment, e.g. XY");
  fo->add_option("--seed", seed, "order in which labelings are tried")->capture_default_str();

  // pattern
  std::string pr;
  auto* pat = app.add_subcommand("pattern", "the corner family that covers a point, if any");
  pat->add_option("--x", xs, "angle at A")->required();
  pat->add_option("--y", ys, "angle at B")->required();
  pat->add_option("--certify", pr, "also certify a square of this half side around the point");
  pat->add_option("--precision", digits, "decimal digits")->capture_default_str();

  auto* presets = app.add_subcommand("regions", "list region presets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto code_of = [&]() {
    std::string s;
    for (const auto& w : code_words) s += w + " ";
    CodeSequence c = parse_code(s);
    require_legal_code(c);
    return c;
  };

  try {
    if (*classify) {
      print_classify(code_of(), out);
      return kOk;
    }
    if (*verify) {
      CorpusReport rep = verify_corpus(read_file(corpus_path));
      out << "entries " << rep.entries << "\n";
      const char* names[] = {"CS", "CNS", "OSO", "ONS", "OSNO"};
      for (size_t i = 0; i < rep.type_counts.size(); ++i) out << names[i] << " " << rep.type_counts[i] << "\n";
      for (const auto& is : rep.issues) out << "line " << is.line << ": " << is.message << "\n";
      out << (rep.ok() ? "corpus ok\n" : "corpus has issues\n");
      return rep.ok() ? kOk : kNegative;
    }
    if (*cov) {
      CoverOptions opt;
      opt.max_depth = max_depth;
      opt.precision = Precision{digits};
      opt.threads = threads;
      opt.use_triples = !no_triples;
      return cmd_cover(resolve_region(region), corpus_path, opt, output, svg, out, err);
    }
    if (*unf) {
      CodeSequence code = code_of();
      AngleAssignment asg = single_asg(code, asg_text);
      Triangle tri(parse_rational(xs), parse_rational(ys));
      Tower tw = unfold(code, asg, tri, Precision{digits});
      ShootingVector w = shooting_vector(code, asg, tri, tw);
      const auto pos = tw.float_positions();
      out << "assignment " << asg.to_string() << "\n";
      out << "vertices " << pos.size() << "\n";
      for (size_t i = 0; i < pos.size(); ++i) {
        const auto& v = tw.shape().vertices[i];
        out << "  " << i << " " << (v.color == Color::Blue ? "blue " : "black") << " " << to_char(v.type) << " "
            << v.label.to_string() << " " << std::setprecision(10) << pos[i][0] << " " << pos[i][1] << "\n";
      }
      out << "shooting vector " << (w.from_theta ? "theta" : "tower") << " c " << w.c.mid_double() << " d "
          << w.d.mid_double() << "\n";
      out << "parallel " << (tw.parallel ? "yes" : "no") << "\nfans below 180 " << (tw.fans_below_180 ? "yes" : "no")
          << "\n";
      TestOutcome a = test_I(tw, w), b = test_II(tw, w);
      out << "test I " << to_string(a.verdict) << "\ntest II " << to_string(b.verdict) << "\n";
      CodeType type = classify_code(code);
      if (type == CodeType::CS || type == CodeType::CNS) out << "test III " << to_string(test_III(tw, w).verdict) << "\n";
      if (!b.reason.empty()) out << "reason " << b.reason << "\n";
      if (!svg.empty()) write_text(svg, render_tower_svg(tw, &w));
      return b.passed() ? kOk : kNegative;
    }
    if (*cert) {
      CodeSequence code = code_of();
      Square sq{parse_rational(cx), parse_rational(cy), parse_rational(rad)};
      bool any = false;
      for (auto [a, b] : parse_asg_choice(asg_text)) {
        AngleAssignment asg = assign_angles(code, a, b);
        auto sys = region_system(code, asg);
        CertifyResult res = certify_square(*sys, sq, Precision{digits});
        out << asg.to_string() << " " << to_string(res.verdict);
        if (res.passed()) out << " margin " << to_decimal_floor(res.margin, 9);
        if (!res.reason.empty()) out << " (" << res.reason << ")";
        out << "\n";
        any = any || res.passed();
      }
      return any ? kOk : kNegative;
    }
    if (*tr) {
      Triangle tri(parse_rational(xs), parse_rational(ys));
      TraceResult res = trace(tri, RayState{side, t, dir}, bounces);
      out << "sides " << res.sides.to_string() << "\n";
      out << "vertex hit " << (res.vertex_hit ? "yes" : "no") << "\n";
      out << std::setprecision(12) << "final side " << res.final_state.side << " t " << res.final_state.t
          << " direction " << res.final_state.direction << "\n";
      return kOk;
    }
    if (*fo) {
      CodeSequence code = code_of();
      Triangle tri(parse_rational(xs), parse_rational(ys));
      std::optional<OrbitResult> r =
          asg_text.empty() ? find_orbit(tri, code, seed) : find_orbit(tri, code, single_asg(code, asg_text));
      if (!r) {
        out << "no orbit found\n";
        return kNegative;
      }
      out << std::setprecision(12) << "start side " << r->start.side << " t " << r->start.t << " direction "
          << r->start.direction << "\n";
      out << "theta " << r->theta << "\nresidual " << r->residual << "\nsides " << r->sides.to_string() << "\n";
      return kOk;
    }
    if (*pat) {
      Rational x = parse_rational(xs), y = parse_rational(ys);
      auto ip = infinite_pattern(x, y);
      if (!ip) {
        out << "no pattern\n";
        return kNegative;
      }
      out << "pattern " << to_string(ip->kind) << " n " << ip->n << " code " << format_code(ip->code) << "\n";
      if (pr.empty()) return kOk;
      Square sq{x, y, parse_rational(pr)};
      for (auto [a, b] : assignment_choices()) {
        auto sys = region_system(ip->code, assign_angles(ip->code, a, b));
        CertifyResult res = certify_square(*sys, sq, Precision{digits});
        if (res.passed()) {
          out << "certified with " << sys->asg.to_string() << " margin " << to_decimal_floor(res.margin, 9) << "\n";
          return kOk;
        }
      }
      out << "not certified\n";
      return kNegative;
    }
    if (*presets) {
      for (const auto& p : region_presets()) out << p.name << ": " << join_points(p.vertices) << "  " << p.note << "\n";
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const IllegalCodeError& e) {
    err << "illegal code: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace poolshot::cli
