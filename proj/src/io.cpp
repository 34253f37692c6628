#include "selfsim/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace selfsim {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  std::string token;
  while (is >> token) out.push_back(token);
  return out;
}

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(Rational::parse(std::string_view(text).substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

const std::string& require(const std::map<std::string, std::string>& kv, const std::string& key,
                           const std::string& tag) {
  auto it = kv.find(key);
  if (it == kv.end()) parse_error("family=" + tag + " needs " + key + "=");
  return it->second;
}

Ifs build_family(const std::string& tag, const std::map<std::string, std::string>& kv, int m) {
  auto expect_keys = [&](std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : kv) {
      bool ok = false;
      for (const char* a : allowed) ok = ok || key == a;
      if (!ok) parse_error("unexpected key \"" + key + "\" for family=" + tag);
    }
  };
  Ifs ifs = [&]() -> Ifs {
    if (tag == "three-map") {
      expect_keys({"rho", "lambda"});
      return three_map(Rational::parse(require(kv, "rho", tag)), Rational::parse(require(kv, "lambda", tag)));
    }
    if (tag == "equal-gap") {
      expect_keys({"ratios"});
      return equal_gap(parse_list(require(kv, "ratios", tag)));
    }
    if (tag == "two-map") {
      expect_keys({"alpha", "beta"});
      return two_map(Rational::parse(require(kv, "alpha", tag)), Rational::parse(require(kv, "beta", tag)));
    }
    if (tag == "grid") {
      expect_keys({"beta"});
      return homogeneous_grid(Rational::parse(require(kv, "beta", tag)), m);
    }
    if (tag == "four-map") {
      expect_keys({});
      return four_map_example();
    }
    parse_error("unknown family \"" + tag + "\"");
  }();
  if (ifs.size() != m) {
    parse_error("header m=" + std::to_string(m) + " but family=" + tag + " has " + std::to_string(ifs.size()) + " maps");
  }
  return ifs;
}

std::string family_params(const Family& family) {
  return std::visit(Overloaded{
                        [](const GenericFamily&) { return std::string(); },
                        [](const ThreeMapFamily& f) { return " rho=" + f.rho.str() + " lambda=" + f.lambda.str(); },
                        [](const EqualGapFamily& f) {
                          std::string out = " ratios=";
                          for (std::size_t i = 0; i < f.ratios.size(); ++i) out += (i ? "," : "") + f.ratios[i].str();
                          return out;
                        },
                        [](const TwoMapFamily& f) { return " alpha=" + f.alpha.str() + " beta=" + f.beta.str(); },
                        [](const GridFamily& f) { return " beta=" + f.beta.str(); },
                        [](const FourMapExampleFamily&) { return std::string(); },
                    },
                    family);
}

std::string gap_text(const std::optional<Gap>& gap) {
  if (!gap) return "outside the hull";
  std::ostringstream os;
  os << *gap;
  return os.str();
}

nlohmann::json word_record(const Word& w) { return w.letters; }

nlohmann::json offsets_record(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

nlohmann::json map_record(const Similitude& f) { return {{"ratio", f.ratio().str()}, {"offset", f.offset().str()}}; }

}  // namespace

Ifs parse_ifs(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string raw;
  std::vector<std::vector<std::string>> lines;
  while (std::getline(is, raw)) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tokens = split_ws(raw);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  if (lines.empty()) parse_error("empty IFS spec");

  const auto& header = lines.front();
  std::map<std::string, std::string> kv;
  for (const auto& token : header) {
    auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) parse_error("header token \"" + token + "\" is not key=value");
    if (!kv.emplace(token.substr(0, eq), token.substr(eq + 1)).second) parse_error("duplicate header key in \"" + token + "\"");
  }
  auto m_it = kv.find("m");
  if (m_it == kv.end()) parse_error("header must start with m=<count>");
  int m = 0;
  try {
    std::size_t used = 0;
    m = std::stoi(m_it->second, &used);
    if (used != m_it->second.size()) throw std::invalid_argument("trailing");
  } catch (const std::exception&) {
    parse_error("bad map count \"" + m_it->second + "\"");
  }
  if (m < 2) parse_error("map count must be >= 2");
  kv.erase(m_it);
  std::string tag = "generic";
  if (auto f = kv.find("family"); f != kv.end()) {
    tag = f->second;
    kv.erase(f);
  }

  std::vector<Similitude> maps;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) parse_error("map line " + std::to_string(i) + " needs \"ratio offset\"");
    maps.emplace_back(Rational::parse(lines[i][0]), Rational::parse(lines[i][1]));
  }

  try {
    if (tag == "generic") {
      if (!kv.empty()) parse_error("family=generic takes no parameters");
      if (static_cast<int>(maps.size()) != m) {
        parse_error("header m=" + std::to_string(m) + " but " + std::to_string(maps.size()) + " map lines");
      }
      return Ifs(std::move(maps));
    }
    Ifs ifs = build_family(tag, kv, m);
    if (!maps.empty() && maps != ifs.maps()) parse_error("map lines do not match family=" + tag);
    return ifs;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    parse_error(e.what());
  }
}

Ifs read_ifs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_ifs(buffer.str());
}

std::string format_ifs(const Ifs& ifs) {
  std::ostringstream os;
  os << "m=" << ifs.size() << " family=" << family_name(ifs.family()) << family_params(ifs.family()) << "\n";
  for (const auto& f : ifs.maps()) os << f.ratio() << " " << f.offset() << "\n";
  return os.str();
}

Similitude parse_map(std::string_view text) {
  auto tokens = split_ws(text);
  if (tokens.size() != 2) parse_error("map spec needs \"ratio offset\", got \"" + std::string(text) + "\"");
  Rational ratio = Rational::parse(tokens[0]);
  if (ratio.is_zero()) parse_error("map ratio must be non-zero");
  return {ratio, Rational::parse(tokens[1])};
}

std::string format_verdict(const EmbeddingVerdict& v) {
  std::ostringstream os;
  os << verdict_kind(v);
  std::visit(Overloaded{
                 [&](const IncludedWord& w) { os << ": word " << w.word; },
                 [&](const IncludedReflectedWord& w) { os << ": word " << w.word << " (reflected, center " << w.center << ")"; },
                 [&](const IncludedCylinderExchange& ex) {
                   os << ":";
                   for (const auto& p : ex.pairs) {
                     os << "\n  f o phi[" << p.branch << "] = phi[" << p.word << "]" << (p.reflected ? " o sigma" : "");
                   }
                   if (ex.center) os << "\n  sigma(x) = 2*" << *ex.center << " - x";
                 },
                 [&](const ExcludedWitness& w) {
                   os << ": point " << w.point << " in K maps to " << w.image << " in gap " << gap_text(w.gap)
                      << " of depth-" << w.depth << " cover";
                 },
                 [&](const UnknownAtDepth& u) { os << ": unresolved at branch depth " << u.depth; },
             },
             v);
  return os.str();
}

std::string format_cover(const CoverReport& report) {
  std::ostringstream os;
  os << "depth " << report.depth << ", " << report.piece_count << " pieces, largest gap " << report.largest_gap << "\n";
  for (const auto& p : report.cover.parts()) os << "  " << p << "\n";
  return os.str();
}

std::string format_enumeration(const EnumerationResult& r) {
  std::ostringstream os;
  os << "ratio " << r.ratio << " (point depth " << r.point_depth << ", cover depth " << r.cover_depth << "): "
     << r.certified.size() << " certified, " << r.candidates.size() << " unresolved\n";
  for (const auto& c : r.certified) os << "  offset " << c.map.offset() << "  " << format_verdict(c.verdict) << "\n";
  for (const auto& c : r.candidates) os << "  candidate " << c << "\n";
  return os.str();
}

std::string format_decomposition(const Decomposition& d, const Similitude& f) {
  std::ostringstream os;
  os << "map " << f << "\n";
  std::visit(Overloaded{
                 [&](const IncludedWord& w) { os << w.word << "\n"; },
                 [&](const IncludedReflectedWord& w) { os << w.word << " (reflected, center " << w.center << ")\n"; },
                 [&](const auto&) { os << format_verdict(d.verdict) << "\n"; },
             },
             d.verdict);
  if (d.residual) os << "residual " << *d.residual << " after " << d.steps << " steps\n";
  if (d.via_fallback) os << "descent stalled after " << d.steps << " steps; verdict from branch search\n";
  return os.str();
}

std::string format_report(const TheoremReport& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << to_string(r.id) << "  " << r.instance << "  [depths p=" << r.depths.point_depth
     << " c=" << r.depths.cover_depth << " b=" << r.depths.branch_depth << "]\n";
  for (const auto& row : r.rows) {
    os << "  ratio " << row.ratio << ": " << row.actual.size() << " certified, " << row.expected.size() << " expected"
       << (row.matches() ? "" : "  MISMATCH");
    if (row.unresolved) os << ", " << row.unresolved << " unresolved (increase depths)";
    os << "\n";
    if (!row.matches()) {
      os << "    expected {";
      for (std::size_t i = 0; i < row.expected.size(); ++i) os << (i ? ", " : "") << row.expected[i];
      os << "}\n    actual   {";
      for (std::size_t i = 0; i < row.actual.size(); ++i) os << (i ? ", " : "") << row.actual[i];
      os << "}\n";
    }
  }
  for (const auto& c : r.checks) os << "  " << (c.pass ? "ok   " : "FAIL ") << c.name << ": " << c.detail << "\n";
  return os.str();
}

nlohmann::json to_record(const Interval& i) { return nlohmann::json::array({i.lo.str(), i.hi.str()}); }

nlohmann::json to_record(const CoverReport& report) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : report.cover.parts()) parts.push_back(to_record(p));
  return {{"depth", report.depth},
          {"piece_count", report.piece_count},
          {"largest_gap", report.largest_gap.str()},
          {"parts", parts}};
}

nlohmann::json to_record(const EmbeddingVerdict& v) {
  nlohmann::json out{{"kind", verdict_kind(v)}};
  std::visit(Overloaded{
                 [&](const IncludedWord& w) { out["word"] = word_record(w.word); },
                 [&](const IncludedReflectedWord& w) {
                   out["word"] = word_record(w.word);
                   out["center"] = w.center.str();
                 },
                 [&](const IncludedCylinderExchange& ex) {
                   nlohmann::json pairs = nlohmann::json::array();
                   for (const auto& p : ex.pairs) {
                     pairs.push_back({{"branch", word_record(p.branch)}, {"word", word_record(p.word)}, {"reflected", p.reflected}});
                   }
                   out["pairs"] = pairs;
                   if (ex.center) out["center"] = ex.center->str();
                 },
                 [&](const ExcludedWitness& w) {
                   out["point"] = w.point.str();
                   out["image"] = w.image.str();
                   out["gap"] = w.gap ? nlohmann::json::array({w.gap->lo.str(), w.gap->hi.str()}) : nlohmann::json(nullptr);
                   out["depth"] = w.depth;
                 },
                 [&](const UnknownAtDepth& u) { out["depth"] = u.depth; },
             },
             v);
  return out;
}

nlohmann::json to_record(const EnumerationResult& r) {
  nlohmann::json certified = nlohmann::json::array();
  for (const auto& c : r.certified) certified.push_back({{"map", map_record(c.map)}, {"verdict", to_record(c.verdict)}});
  nlohmann::json candidates = nlohmann::json::array();
  for (const auto& c : r.candidates) candidates.push_back(to_record(c));
  return {{"ratio", r.ratio.str()},
          {"point_depth", r.point_depth},
          {"cover_depth", r.cover_depth},
          {"certified", certified},
          {"candidates", candidates},
          {"refuted", r.refuted.size()}};
}

nlohmann::json to_record(const Decomposition& d) {
  nlohmann::json out{{"verdict", to_record(d.verdict)}, {"via_fallback", d.via_fallback}, {"steps", d.steps}};
  if (d.residual) out["residual"] = map_record(*d.residual);
  return out;
}

nlohmann::json to_record(const TheoremReport& r) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"ratio", row.ratio.str()},
                    {"expected", offsets_record(row.expected)},
                    {"actual", offsets_record(row.actual)},
                    {"unresolved", row.unresolved},
                    {"match", row.matches()}});
  }
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"theorem", to_string(r.id)},
          {"instance", r.instance},
          {"depths",
           {{"point", r.depths.point_depth}, {"cover", r.depths.cover_depth}, {"branch", r.depths.branch_depth}}},
          {"rows", rows},
          {"checks", checks},
          {"pass", r.pass}};
}

}  // namespace selfsim
