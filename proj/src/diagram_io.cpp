#include "falkit/diagram_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace falkit {

namespace {

constexpr std::string_view kHeader = "falkit diagram v1";

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

bool id_char(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '.';
}

bool is_id(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!id_char(c)) return false;
  return true;
}

class Parser {
 public:
  explicit Parser(std::string_view text) { split(text); }

  FALDiagram run();

 private:
  std::vector<Line> lines_;
  std::string header_;
  std::size_t header_line_ = 0;

  void split(std::string_view text);

  [[noreturn]] static void fail(const Line& line, const Token& at, const std::string& what) {
    throw ParseError(line.number, at.column, what);
  }
  [[noreturn]] static void fail_after(const Line& line, const std::string& what) {
    const auto& last = line.tokens.back();
    throw ParseError(line.number, last.column + last.text.size(), what);
  }

  static const Token& need(const Line& line, std::size_t i, const std::string& what) {
    if (i >= line.tokens.size()) fail_after(line, "expected " + what);
    return line.tokens[i];
  }
  static void no_more(const Line& line, std::size_t i) {
    if (i < line.tokens.size()) fail(line, line.tokens[i], "unexpected '" + line.tokens[i].text + "'");
  }
  static std::string ident(const Line& line, std::size_t i, const std::string& what) {
    const auto& t = need(line, i, what);
    if (!is_id(t.text)) fail(line, t, "expected " + what + ", got '" + t.text + "'");
    return t.text;
  }
  static int integer(const Line& line, std::size_t i, const std::string& what) {
    const auto& t = need(line, i, what);
    int value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last)
      fail(line, t, "expected " + what + ", got '" + t.text + "'");
    return value;
  }
};

void Parser::split(std::string_view text) {
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);

    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
      i = j;
    }
    if (line.tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (header_line_ == 0) {
      std::string joined;
      for (const auto& t : line.tokens) joined += (joined.empty() ? "" : " ") + t.text;
      const auto first = raw.find_first_not_of(" \t");
      std::string_view trimmed = raw.substr(first);
      while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t')) trimmed.remove_suffix(1);
      if (trimmed != kHeader)
        throw ParseError(number, first + 1, "expected header 'falkit diagram v1'");
      header_line_ = number;
    } else {
      lines_.push_back(std::move(line));
    }
    if (end == text.size()) break;
  }
  if (header_line_ == 0) throw ParseError(number == 0 ? 1 : number, 1, "missing header 'falkit diagram v1'");
}

FALDiagram Parser::run() {
  FALDiagram d;
  bool have_genus = false, have_manifold = false, thickened = false;
  std::set<std::string> circle_ids, strand_ids, edge_ids;
  bool have_vertexset = false;
  FaceData faces;
  bool any_face_data = false;

  struct Pending {
    const Line* line;
    const Token* token;
    std::string id;
  };
  std::vector<Pending> circle_refs, edge_refs;

  for (const auto& line : lines_) {
    const auto& head = line.tokens[0];
    const std::string& kw = head.text;
    if (kw == "surface") {
      if (have_genus) fail(line, head, "surface genus given twice");
      if (need(line, 1, "'genus'").text != "genus") fail(line, line.tokens[1], "expected 'genus'");
      d.surface_genus = integer(line, 2, "genus");
      no_more(line, 3);
      have_genus = true;
    } else if (kw == "manifold") {
      if (have_manifold) fail(line, head, "manifold given twice");
      const auto& kind = need(line, 1, "manifold kind");
      if (kind.text == "ball") {
        d.manifold = Ball{};
        no_more(line, 2);
      } else if (kind.text == "handlebody") {
        d.manifold = Handlebody{integer(line, 2, "handlebody genus")};
        no_more(line, 3);
      } else if (kind.text == "thickened_surface") {
        thickened = true;
        no_more(line, 2);
      } else if (kind.text == "custom") {
        if (need(line, 2, "'chi'").text != "chi") fail(line, line.tokens[2], "expected 'chi'");
        const int chi = integer(line, 3, "Euler characteristic");
        d.manifold = CustomManifold{chi, ident(line, 4, "manifold label")};
        no_more(line, 5);
      } else {
        fail(line, kind, "unknown manifold '" + kind.text + "'");
      }
      have_manifold = true;
    } else if (kw == "circle") {
      CrossingCircle c;
      c.id = ident(line, 1, "circle id");
      if (!circle_ids.insert(c.id).second) fail(line, line.tokens[1], "duplicate circle id '" + c.id + "'");
      if (need(line, 2, "'half_twist'").text != "half_twist") fail(line, line.tokens[2], "expected 'half_twist'");
      const auto& t = need(line, 3, "half twist (+, - or none)");
      if (t.text == "+") c.half_twist = HalfTwist::Positive;
      else if (t.text == "-") c.half_twist = HalfTwist::Negative;
      else if (t.text == "none") c.half_twist = HalfTwist::None;
      else fail(line, t, "expected half twist +, - or none, got '" + t.text + "'");
      no_more(line, 4);
      d.circles.push_back(std::move(c));
    } else if (kw == "strand") {
      Strand s;
      s.id = ident(line, 1, "strand id");
      if (!strand_ids.insert(s.id).second) fail(line, line.tokens[1], "duplicate strand id '" + s.id + "'");
      if (need(line, 2, "':'").text != ":") fail(line, line.tokens[2], "expected ':'");
      for (std::size_t i = 3; i < line.tokens.size(); ++i) {
        const auto& t = line.tokens[i];
        const std::string& p = t.text;
        // <circle>.<A|B><+|->, read from the end since ids may contain dots
        if (p.size() < 4 || (p.back() != '+' && p.back() != '-') ||
            (p[p.size() - 2] != 'A' && p[p.size() - 2] != 'B') || p[p.size() - 3] != '.' ||
            !is_id(std::string_view(p).substr(0, p.size() - 3)))
          fail(line, t, "expected passage <circle>.<A|B><+|->, got '" + p + "'");
        Passage pass{p.substr(0, p.size() - 3), p[p.size() - 2] == 'A' ? Slot::A : Slot::B,
                     p.back() == '+' ? 1 : -1};
        circle_refs.push_back({&line, &t, pass.circle});
        s.passages.push_back(std::move(pass));
      }
      d.strands.push_back(std::move(s));
    } else if (kw == "vertexset") {
      if (have_vertexset) fail(line, head, "vertexset given twice");
      have_vertexset = any_face_data = true;
      std::set<std::string> seen;
      for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        auto v = ident(line, i, "vertex");
        if (!seen.insert(v).second) fail(line, line.tokens[i], "duplicate vertex '" + v + "'");
        faces.vertices.push_back(std::move(v));
      }
    } else if (kw == "edge") {
      any_face_data = true;
      Edge e{ident(line, 1, "edge id"), ident(line, 2, "vertex"), ident(line, 3, "vertex")};
      no_more(line, 4);
      if (!edge_ids.insert(e.id).second) fail(line, line.tokens[1], "duplicate edge id '" + e.id + "'");
      if (have_vertexset) {
        for (std::size_t i : {2u, 3u}) {
          const auto& v = line.tokens[i].text;
          if (std::find(faces.vertices.begin(), faces.vertices.end(), v) == faces.vertices.end())
            fail(line, line.tokens[i], "unknown vertex '" + v + "'");
        }
      }
      faces.edges.push_back(std::move(e));
    } else if (kw == "face") {
      any_face_data = true;
      if (need(line, 1, "':'").text != ":") fail(line, line.tokens[1], "expected ':'");
      FaceWalk walk;
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        const auto& t = line.tokens[i];
        const std::string& p = t.text;
        if (p.size() < 2 || (p.back() != '^' && p.back() != '_') ||
            !is_id(std::string_view(p).substr(0, p.size() - 1)))
          fail(line, t, "expected edge side <edge>^ or <edge>_, got '" + p + "'");
        walk.push_back({p.substr(0, p.size() - 1), p.back() == '^'});
        edge_refs.push_back({&line, &t, walk.back().edge});
      }
      if (walk.empty()) fail_after(line, "face needs at least one edge side");
      faces.faces.push_back(std::move(walk));
    } else {
      fail(line, head, "unknown statement '" + kw + "'");
    }
  }

  if (thickened) d.manifold = ThickenedSurface{d.surface_genus};
  for (const auto& r : circle_refs)
    if (!circle_ids.count(r.id)) fail(*r.line, *r.token, "unknown circle '" + r.id + "'");
  for (const auto& r : edge_refs)
    if (!edge_ids.count(r.id)) fail(*r.line, *r.token, "unknown edge '" + r.id + "'");

  if (any_face_data) {
    if (!have_vertexset) {
      for (const auto& e : faces.edges)
        for (const auto* v : {&e.from, &e.to})
          if (std::find(faces.vertices.begin(), faces.vertices.end(), *v) == faces.vertices.end())
            faces.vertices.push_back(*v);
    }
    d.embedding = std::move(faces);
  }
  return d;
}

}  // namespace

FALDiagram parse_diagram(std::string_view text) { return Parser(text).run(); }

std::string serialize_diagram(const FALDiagram& d) {
  std::ostringstream out;
  out << kHeader << "\n";
  out << "surface genus " << d.surface_genus << "\n";
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, Ball>) out << "manifold ball\n";
        else if constexpr (std::is_same_v<M, Handlebody>) out << "manifold handlebody " << m.genus << "\n";
        else if constexpr (std::is_same_v<M, ThickenedSurface>) out << "manifold thickened_surface\n";
        else out << "manifold custom chi " << m.chi << " " << m.label << "\n";
      },
      d.manifold);
  for (const auto& c : d.circles) {
    out << "circle " << c.id << " half_twist "
        << (c.half_twist == HalfTwist::Positive ? "+" : c.half_twist == HalfTwist::Negative ? "-" : "none")
        << "\n";
  }
  for (const auto& s : d.strands) {
    out << "strand " << s.id << " :";
    for (const auto& p : s.passages)
      out << " " << p.circle << "." << (p.slot == Slot::A ? 'A' : 'B') << (p.direction > 0 ? '+' : '-');
    out << "\n";
  }
  if (d.embedding) {
    out << "vertexset";
    for (const auto& v : d.embedding->vertices) out << " " << v;
    out << "\n";
    for (const auto& e : d.embedding->edges) out << "edge " << e.id << " " << e.from << " " << e.to << "\n";
    for (const auto& f : d.embedding->faces) {
      out << "face :";
      for (const auto& dart : f) out << " " << dart.edge << (dart.forward ? '^' : '_');
      out << "\n";
    }
  }
  return out.str();
}

FALDiagram load_diagram(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_diagram(buffer.str());
}

}  // namespace falkit
