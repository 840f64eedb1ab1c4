#include "qvt/document.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qvt {

const char* presentation_name(Presentation p) {
  switch (p) {
    case Presentation::gauge: return "gauge";
    case Presentation::distance: return "distance";
    case Presentation::system: return "system";
  }
  return "?";
}

bool StructureDoc::operator==(const StructureDoc& other) const {
  return elements == other.elements && bottom == other.bottom &&
         top == other.top && leq == other.leq && star == other.star &&
         points == other.points && kind == other.kind &&
         distance == other.distance && metric_names == other.metric_names &&
         metrics == other.metrics && func_names == other.func_names &&
         funcs == other.funcs;
}

namespace {

struct Token {
  std::string text;
  int line = 0;
  int col = 0;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f') {
      ++col;
      ++i;
      continue;
    }
    Token t{{}, line, col};
    while (i < text.size()) {
      const char d = text[i];
      if (d == '\n' || d == '#' || d == ' ' || d == '\t' || d == '\r' ||
          d == '\v' || d == '\f') {
        break;
      }
      t.text += d;
      ++i;
      ++col;
    }
    out.push_back(std::move(t));
  }
  return out;
}

enum class Section {
  none,
  quantale,
  space,
  distance,
  gauge,
  system,
  metrics,
  functions,
};

bool section_keyword(const std::string& s, Section& out) {
  if (s == "quantale") out = Section::quantale;
  else if (s == "space") out = Section::space;
  else if (s == "distance") out = Section::distance;
  else if (s == "gauge") out = Section::gauge;
  else if (s == "system") out = Section::system;
  else if (s == "metrics") out = Section::metrics;
  else if (s == "functions") out = Section::functions;
  else return false;
  return true;
}

bool quantale_directive(const std::string& s) {
  return s == "elements:" || s == "bottom:" || s == "top:" || s == "leq:" ||
         s == "star:";
}

struct RawEntry {
  std::vector<std::string> fields;
  Token tok;
};

struct RawFunc {
  std::string name;
  Token tok;
  bool use = false;
  std::vector<RawEntry> rows;  // fields: point, value (metrics: x, y, value)
};

struct RawBlock {
  std::string point;
  Token tok;
  std::vector<RawFunc> funcs;
};

const int kMaxDistancePoints = 16;

// Bounds inside a declared (possibly not yet validated) order; -1 when the
// declared relation has none.  load_space re-validates the full lattice.
Elem order_glb(const std::vector<char>& leq, int n, Elem a, Elem b) {
  for (Elem l = 0; l < n; ++l) {
    if (!leq[l * n + a] || !leq[l * n + b]) continue;
    bool greatest = true;
    for (Elem m = 0; m < n; ++m) {
      if (leq[m * n + a] && leq[m * n + b] && !leq[m * n + l]) {
        greatest = false;
        break;
      }
    }
    if (greatest) return l;
  }
  return -1;
}

Elem order_lub(const std::vector<char>& leq, int n, Elem a, Elem b) {
  for (Elem l = 0; l < n; ++l) {
    if (!leq[a * n + l] || !leq[b * n + l]) continue;
    bool least = true;
    for (Elem m = 0; m < n; ++m) {
      if (leq[a * n + m] && leq[b * n + m] && !leq[l * n + m]) {
        least = false;
        break;
      }
    }
    if (least) return l;
  }
  return -1;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  ParseResult run() {
    collect();
    StructureDoc doc;
    resolve(doc);
    ParseResult result;
    result.diagnostics = std::move(diags_);
    bool failed = false;
    for (const Diagnostic& d : result.diagnostics) {
      if (d.severity == "error") failed = true;
    }
    if (!failed) result.doc = std::move(doc);
    return result;
  }

 private:
  std::vector<Token> toks_;
  std::size_t i_ = 0;
  std::vector<Diagnostic> diags_;

  // raw collections
  std::vector<Token> elements_;
  Token bottom_tok_, top_tok_;
  bool has_bottom_ = false, has_top_ = false;
  bool has_quantale_ = false, has_space_ = false;
  std::vector<RawEntry> leq_;        // fields: a, b
  bool star_meet_ = false;
  Token star_tok_;
  bool has_star_ = false;
  std::vector<RawEntry> star_rows_;  // fields: a, b, c
  std::vector<Token> points_;
  std::vector<Section> structures_seen_;
  Token structure_tok_;
  std::vector<RawEntry> distance_rows_;  // fields: x, set, value
  std::vector<RawFunc> gauge_metrics_;
  std::vector<RawFunc> metric_pool_;
  std::vector<RawBlock> system_blocks_;
  std::vector<RawFunc> func_pool_;

  bool done() const { return i_ >= toks_.size(); }
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }

  void diag(const Token& t, std::string message, std::string hint = {}) {
    diags_.push_back(Diagnostic{"error", std::move(message), t.line, t.col,
                                std::move(hint)});
  }

  bool at_section() const {
    Section s;
    return !done() && peek().col == 1 && section_keyword(peek().text, s);
  }

  // A single id token after a directive; empty string when absent.
  std::string take_id(const Token& directive) {
    if (done() || at_section() || quantale_directive(peek().text)) {
      diag(directive, "expected an id after '" + directive.text + "'");
      return {};
    }
    return take().text;
  }

  void collect() {
    Section current = Section::none;
    while (!done()) {
      Section s;
      if (peek().col == 1 && section_keyword(peek().text, s)) {
        const Token t = take();
        current = s;
        if (s == Section::quantale) has_quantale_ = true;
        if (s == Section::space) has_space_ = true;
        if (s == Section::distance || s == Section::gauge ||
            s == Section::system) {
          structures_seen_.push_back(s);
          structure_tok_ = t;
        }
        continue;
      }
      switch (current) {
        case Section::none:
          diag(peek(), "content before the first section",
               "start with 'quantale'");
          take();
          break;
        case Section::quantale: collect_quantale(); break;
        case Section::space: collect_space(); break;
        case Section::distance: collect_distance(); break;
        case Section::gauge: collect_metric_list(gauge_metrics_, true); break;
        case Section::metrics: collect_metric_list(metric_pool_, false); break;
        case Section::system: collect_system(); break;
        case Section::functions: collect_functions(); break;
      }
    }
  }

  void collect_quantale() {
    const Token t = take();
    if (t.text == "elements:") {
      while (!done() && !at_section() && !quantale_directive(peek().text)) {
        elements_.push_back(take());
      }
    } else if (t.text == "bottom:") {
      const std::string id = take_id(t);
      if (!id.empty()) {
        bottom_tok_ = Token{id, t.line, t.col};
        has_bottom_ = true;
      }
    } else if (t.text == "top:") {
      const std::string id = take_id(t);
      if (!id.empty()) {
        top_tok_ = Token{id, t.line, t.col};
        has_top_ = true;
      }
    } else if (t.text == "leq:") {
      while (!done() && !at_section() &&
             peek().text.find("<=") != std::string::npos) {
        const Token p = take();
        const std::size_t pos = p.text.find("<=");
        leq_.push_back(RawEntry{
            {p.text.substr(0, pos), p.text.substr(pos + 2)}, p});
      }
    } else if (t.text == "star:") {
      has_star_ = true;
      star_tok_ = t;
      if (!done() && !at_section() && peek().text == "meet") {
        star_meet_ = true;
        take();
      }
      while (!done() && !at_section()) {
        const std::string& s = peek().text;
        const std::size_t mul = s.find('*');
        const std::size_t eq = s.find('=', mul == std::string::npos ? 0 : mul);
        if (mul == std::string::npos || eq == std::string::npos || mul == 0 ||
            eq <= mul + 1 || eq + 1 >= s.size()) {
          break;
        }
        const Token p = take();
        star_rows_.push_back(RawEntry{{s.substr(0, mul),
                                       s.substr(mul + 1, eq - mul - 1),
                                       s.substr(eq + 1)},
                                      p});
      }
    } else {
      diag(t, "unexpected token in the quantale section",
           "expected elements:, bottom:, top:, leq: or star:");
    }
  }

  void collect_space() {
    const Token t = take();
    if (t.text == "points:") {
      while (!done() && !at_section() && peek().text != "points:") {
        points_.push_back(take());
      }
    } else {
      diag(t, "unexpected token in the space section", "expected points:");
    }
  }

  // delta X {..} = V
  void collect_distance() {
    const Token t = take();
    if (t.text != "delta") {
      diag(t, "unexpected token in the distance section",
           "rows look like: delta x {y} = v");
      return;
    }
    std::vector<std::string> fields;
    for (int k = 0; k < 4; ++k) {
      if (done() || at_section()) {
        diag(t, "truncated distance row", "delta x {y} = v");
        return;
      }
      fields.push_back(take().text);
    }
    if (fields[2] != "=") {
      diag(t, "malformed distance row", "delta x {y} = v");
      return;
    }
    distance_rows_.push_back(RawEntry{{fields[0], fields[1], fields[3]}, t});
  }

  // metric NAME / use NAME / d X Y = V
  void collect_metric_list(std::vector<RawFunc>& into, bool allow_use) {
    const Token t = take();
    if (t.text == "metric") {
      const std::string id = take_id(t);
      if (!id.empty()) into.push_back(RawFunc{id, t, false, {}});
    } else if (t.text == "use" && allow_use) {
      const std::string id = take_id(t);
      if (!id.empty()) into.push_back(RawFunc{id, t, true, {}});
    } else if (t.text == "d") {
      if (into.empty() || into.back().use) {
        diag(t, "metric row outside a metric block",
             "open one with: metric NAME");
        skip_row(3);
        return;
      }
      std::vector<std::string> fields;
      for (int k = 0; k < 4; ++k) {
        if (done() || at_section()) {
          diag(t, "truncated metric row", "d x y = v");
          return;
        }
        fields.push_back(take().text);
      }
      if (fields[2] != "=") {
        diag(t, "malformed metric row", "d x y = v");
        return;
      }
      into.back().rows.push_back(RawEntry{{fields[0], fields[1], fields[3]}, t});
    } else {
      diag(t, "unexpected token in a metric section",
           allow_use ? "expected metric, use or d" : "expected metric or d");
    }
  }

  // at POINT / phi NAME / use NAME / f X = V
  void collect_system() {
    const Token t = take();
    if (t.text == "at") {
      const std::string id = take_id(t);
      if (!id.empty()) system_blocks_.push_back(RawBlock{id, t, {}});
    } else if (t.text == "phi" || t.text == "use") {
      if (system_blocks_.empty()) {
        diag(t, "function outside an at block", "open one with: at POINT");
        take_id(t);
        return;
      }
      const std::string id = take_id(t);
      if (!id.empty()) {
        system_blocks_.back().funcs.push_back(
            RawFunc{id, t, t.text == "use", {}});
      }
    } else if (t.text == "f") {
      if (system_blocks_.empty() || system_blocks_.back().funcs.empty() ||
          system_blocks_.back().funcs.back().use) {
        diag(t, "function row outside a phi block", "open one with: phi NAME");
        skip_row(2);
        return;
      }
      std::vector<std::string> fields;
      for (int k = 0; k < 3; ++k) {
        if (done() || at_section()) {
          diag(t, "truncated function row", "f x = v");
          return;
        }
        fields.push_back(take().text);
      }
      if (fields[1] != "=") {
        diag(t, "malformed function row", "f x = v");
        return;
      }
      system_blocks_.back().funcs.back().rows.push_back(
          RawEntry{{fields[0], fields[2]}, t});
    } else {
      diag(t, "unexpected token in the system section",
           "expected at, phi, use or f");
    }
  }

  void collect_functions() {
    const Token t = take();
    if (t.text == "phi") {
      const std::string id = take_id(t);
      if (!id.empty()) func_pool_.push_back(RawFunc{id, t, false, {}});
    } else if (t.text == "f") {
      if (func_pool_.empty()) {
        diag(t, "function row outside a phi block", "open one with: phi NAME");
        skip_row(2);
        return;
      }
      std::vector<std::string> fields;
      for (int k = 0; k < 3; ++k) {
        if (done() || at_section()) {
          diag(t, "truncated function row", "f x = v");
          return;
        }
        fields.push_back(take().text);
      }
      if (fields[1] != "=") {
        diag(t, "malformed function row", "f x = v");
        return;
      }
      func_pool_.back().rows.push_back(RawEntry{{fields[0], fields[2]}, t});
    } else {
      diag(t, "unexpected token in the functions section",
           "expected phi or f");
    }
  }

  void skip_row(int count) {
    for (int k = 0; k < count && !done() && !at_section(); ++k) take();
  }

  // ---- resolution ----

  Elem resolve(const std::map<std::string, int>& ids, const std::string& name,
               const Token& t, const char* what) {
    auto it = ids.find(name);
    if (it == ids.end()) {
      diag(t, std::string("unknown ") + what + " '" + name + "'",
           std::string("declared ") +
               (std::string(what) == "point" ? "in points:" : "in elements:"));
      return -1;
    }
    return it->second;
  }

  void resolve(StructureDoc& doc) {
    if (!has_quantale_) {
      diags_.push_back(
          Diagnostic{"error", "missing quantale section", 1, 1, {}});
      return;
    }

    std::map<std::string, int> eid;
    for (const Token& t : elements_) {
      if (eid.count(t.text)) {
        diag(t, "duplicate element '" + t.text + "'");
        continue;
      }
      eid[t.text] = static_cast<int>(doc.elements.size());
      doc.elements.push_back(t.text);
    }
    const int n = static_cast<int>(doc.elements.size());
    if (n == 0) {
      diags_.push_back(
          Diagnostic{"error", "quantale has no elements", 1, 1, {}});
      return;
    }
    if (has_bottom_) {
      doc.bottom = resolve(eid, bottom_tok_.text, bottom_tok_, "element");
    } else {
      diags_.push_back(Diagnostic{"error", "missing bottom:", 1, 1, {}});
    }
    if (has_top_) {
      doc.top = resolve(eid, top_tok_.text, top_tok_, "element");
    } else {
      diags_.push_back(Diagnostic{"error", "missing top:", 1, 1, {}});
    }

    doc.leq.assign(static_cast<std::size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a) doc.leq[a * n + a] = 1;
    for (const RawEntry& e : leq_) {
      const Elem a = resolve(eid, e.fields[0], e.tok, "element");
      const Elem b = resolve(eid, e.fields[1], e.tok, "element");
      if (a >= 0 && b >= 0) doc.leq[a * n + b] = 1;
    }
    for (int k = 0; k < n; ++k) {
      for (int a = 0; a < n; ++a) {
        if (!doc.leq[a * n + k]) continue;
        for (int b = 0; b < n; ++b) {
          if (doc.leq[k * n + b]) doc.leq[a * n + b] = 1;
        }
      }
    }

    doc.star.assign(static_cast<std::size_t>(n) * n, -1);
    if (!has_star_) {
      diags_.push_back(Diagnostic{"error", "missing star:", 1, 1, {}});
    }
    if (star_meet_) {
      for (int a = 0; a < n && has_star_; ++a) {
        for (int b = 0; b < n; ++b) {
          const Elem m = order_glb(doc.leq, n, a, b);
          if (m < 0) {
            diag(star_tok_,
                 "star: meet needs a meet of " + doc.elements[a] + " and " +
                     doc.elements[b],
                 "the declared order has no greatest lower bound here");
            return;
          }
          doc.star[a * n + b] = m;
        }
      }
    }
    std::vector<char> star_seen(static_cast<std::size_t>(n) * n, 0);
    for (const RawEntry& e : star_rows_) {
      const Elem a = resolve(eid, e.fields[0], e.tok, "element");
      const Elem b = resolve(eid, e.fields[1], e.tok, "element");
      const Elem c = resolve(eid, e.fields[2], e.tok, "element");
      if (a < 0 || b < 0 || c < 0) continue;
      if (star_seen[a * n + b]) {
        diag(e.tok, "duplicate star entry " + doc.elements[a] + "*" +
                        doc.elements[b]);
        continue;
      }
      star_seen[a * n + b] = 1;
      doc.star[a * n + b] = c;
    }
    if (has_star_ && !star_meet_) {
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          if (doc.star[a * n + b] < 0) {
            diag(star_tok_,
                 "star table is missing " + doc.elements[a] + "*" +
                     doc.elements[b],
                 "list every pair or use the 'star: meet' shorthand");
            return;
          }
        }
      }
    }

    if (!has_space_) {
      diags_.push_back(Diagnostic{"error", "missing space section", 1, 1, {}});
      return;
    }
    std::map<std::string, int> pid;
    for (const Token& t : points_) {
      if (pid.count(t.text)) {
        diag(t, "duplicate point '" + t.text + "'");
        continue;
      }
      pid[t.text] = static_cast<int>(doc.points.size());
      doc.points.push_back(t.text);
    }
    const int np = static_cast<int>(doc.points.size());
    if (np == 0) {
      diags_.push_back(Diagnostic{"error", "space has no points", 1, 1, {}});
      return;
    }

    if (structures_seen_.size() != 1) {
      if (structures_seen_.empty()) {
        diags_.push_back(Diagnostic{
            "error", "missing structure section", 1, 1,
            "exactly one of distance, gauge or system is required"});
      } else {
        diag(structure_tok_, "exactly one structure section is allowed");
      }
      return;
    }

    switch (structures_seen_.front()) {
      case Section::distance:
        doc.kind = Presentation::distance;
        resolve_distance(doc, eid, pid);
        break;
      case Section::gauge:
        doc.kind = Presentation::gauge;
        resolve_gauge(doc, eid, pid);
        break;
      case Section::system:
        doc.kind = Presentation::system;
        resolve_system(doc, eid, pid);
        break;
      default: break;
    }
  }

  bool parse_set(const std::string& s, const Token& t,
                 const std::map<std::string, int>& pid, PSubset& out) {
    if (s.size() < 2 || s.front() != '{' || s.back() != '}') {
      diag(t, "malformed point set '" + s + "'", "like {a,b} or {}");
      return false;
    }
    out = 0;
    std::size_t start = 1;
    while (start < s.size() - 1) {
      std::size_t comma = s.find(',', start);
      if (comma == std::string::npos || comma > s.size() - 1) {
        comma = s.size() - 1;
      }
      const std::string name = s.substr(start, comma - start);
      const int x = resolve(pid, name, t, "point");
      if (x < 0) return false;
      out |= PSubset{1} << x;
      start = comma + 1;
    }
    return true;
  }

  void resolve_distance(StructureDoc& doc,
                        const std::map<std::string, int>& eid,
                        const std::map<std::string, int>& pid) {
    const int np = static_cast<int>(doc.points.size());
    if (np > kMaxDistancePoints) {
      diag(structure_tok_, "too many points for a distance table",
           "at most " + std::to_string(kMaxDistancePoints));
      return;
    }
    const PSubset full = (PSubset{1} << np) - 1;
    std::map<std::pair<int, PSubset>, Elem> listed;
    for (const RawEntry& e : distance_rows_) {
      const int x = resolve(pid, e.fields[0], e.tok, "point");
      PSubset a = 0;
      if (x < 0 || !parse_set(e.fields[1], e.tok, pid, a)) continue;
      const Elem v = resolve(eid, e.fields[2], e.tok, "element");
      if (v < 0) continue;
      const auto key = std::make_pair(x, a);
      if (listed.count(key)) {
        diag(e.tok, "duplicate distance entry delta " + doc.points[x] + " " +
                        e.fields[1]);
        continue;
      }
      listed[key] = v;
    }
    for (int x = 0; x < np; ++x) {
      for (int y = 0; y < np; ++y) {
        if (x == y) continue;
        if (!listed.count({x, PSubset{1} << y})) {
          diag(structure_tok_,
               "missing singleton entry delta " + doc.points[x] + " {" +
                   doc.points[y] + "}",
               "off-diagonal singletons must be listed");
        }
      }
    }
    for (const Diagnostic& d : diags_) {
      if (d.severity == "error") return;
    }
    doc.distance.assign(static_cast<std::size_t>(np) << np, doc.bottom);
    for (int x = 0; x < np; ++x) {
      for (PSubset a = 0; a <= full; ++a) {
        Elem v;
        if (a == 0) {
          v = doc.bottom;
        } else if (a == (PSubset{1} << x)) {
          v = doc.top;
        } else if ((a & (a - 1)) == 0) {
          int y = 0;
          while (((a >> y) & 1) == 0) ++y;
          v = listed.at({x, a});
        } else {
          // union completion from the singleton rows
          v = doc.bottom;
          const int nq = static_cast<int>(doc.elements.size());
          for (int y = 0; y < np; ++y) {
            if (((a >> y) & 1) == 0) continue;
            const Elem s = y == x ? doc.top : listed.at({x, PSubset{1} << y});
            const Elem j = order_lub(doc.leq, nq, v, s);
            v = j < 0 ? v : j;
          }
        }
        const auto it = listed.find({x, a});
        if (it != listed.end()) v = it->second;
        doc.distance[(static_cast<std::size_t>(x) << np) + a] = v;
      }
    }
  }

  std::vector<Elem> resolve_table(const RawFunc& f,
                                  const std::map<std::string, int>& eid,
                                  const std::map<std::string, int>& pid,
                                  int np, Elem top) {
    std::vector<Elem> table(static_cast<std::size_t>(np) * np, top);
    std::vector<char> seen(static_cast<std::size_t>(np) * np, 0);
    for (const RawEntry& e : f.rows) {
      const int x = resolve(pid, e.fields[0], e.tok, "point");
      const int y = resolve(pid, e.fields[1], e.tok, "point");
      const Elem v = resolve(eid, e.fields[2], e.tok, "element");
      if (x < 0 || y < 0 || v < 0) continue;
      if (seen[x * np + y]) {
        diag(e.tok, "duplicate metric entry d " + e.fields[0] + " " +
                        e.fields[1]);
        continue;
      }
      seen[x * np + y] = 1;
      table[x * np + y] = v;
    }
    return table;
  }

  void resolve_gauge(StructureDoc& doc, const std::map<std::string, int>& eid,
                     const std::map<std::string, int>& pid) {
    const int np = static_cast<int>(doc.points.size());
    std::map<std::string, const RawFunc*> pool;
    for (const RawFunc& f : metric_pool_) {
      if (pool.count(f.name)) {
        diag(f.tok, "duplicate metric name '" + f.name + "'");
        continue;
      }
      pool[f.name] = &f;
    }
    std::map<std::string, bool> used_names;
    for (const RawFunc& f : gauge_metrics_) {
      const RawFunc* src = &f;
      if (f.use) {
        auto it = pool.find(f.name);
        if (it == pool.end()) {
          diag(f.tok, "unknown metric '" + f.name + "'",
               "declared in the metrics section");
          continue;
        }
        src = it->second;
      }
      if (used_names.count(f.name)) {
        diag(f.tok, "duplicate metric name '" + f.name + "'");
        continue;
      }
      used_names[f.name] = true;
      doc.metric_names.push_back(f.name);
      doc.metrics.push_back(resolve_table(*src, eid, pid, np, doc.top));
    }
  }

  std::vector<Elem> resolve_func(const RawFunc& f,
                                 const std::map<std::string, int>& eid,
                                 const std::map<std::string, int>& pid,
                                 int np, Elem top) {
    std::vector<Elem> table(static_cast<std::size_t>(np), top);
    std::vector<char> seen(static_cast<std::size_t>(np), 0);
    for (const RawEntry& e : f.rows) {
      const int x = resolve(pid, e.fields[0], e.tok, "point");
      const Elem v = resolve(eid, e.fields[1], e.tok, "element");
      if (x < 0 || v < 0) continue;
      if (seen[x]) {
        diag(e.tok, "duplicate function entry f " + e.fields[0]);
        continue;
      }
      seen[x] = 1;
      table[x] = v;
    }
    return table;
  }

  void resolve_system(StructureDoc& doc, const std::map<std::string, int>& eid,
                      const std::map<std::string, int>& pid) {
    const int np = static_cast<int>(doc.points.size());
    std::map<std::string, const RawFunc*> pool;
    for (const RawFunc& f : func_pool_) {
      if (pool.count(f.name)) {
        diag(f.tok, "duplicate function name '" + f.name + "'");
        continue;
      }
      pool[f.name] = &f;
    }
    doc.func_names.assign(static_cast<std::size_t>(np), {});
    doc.funcs.assign(static_cast<std::size_t>(np), {});
    for (const RawBlock& b : system_blocks_) {
      const int x = resolve(pid, b.point, b.tok, "point");
      if (x < 0) continue;
      for (const RawFunc& f : b.funcs) {
        const RawFunc* src = &f;
        if (f.use) {
          auto it = pool.find(f.name);
          if (it == pool.end()) {
            diag(f.tok, "unknown function '" + f.name + "'",
                 "declared in the functions section");
            continue;
          }
          src = it->second;
        }
        doc.func_names[x].push_back(f.name);
        doc.funcs[x].push_back(resolve_func(*src, eid, pid, np, doc.top));
      }
    }
  }
};

bool star_is_meet(const StructureDoc& doc) {
  const int n = static_cast<int>(doc.elements.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (doc.star[a * n + b] != order_glb(doc.leq, n, a, b)) return false;
    }
  }
  return true;
}

void emit_chunked(std::string& out, const std::string& head,
                  const std::vector<std::string>& items, int per_line) {
  out += head;
  int k = 0;
  for (const std::string& item : items) {
    if (k > 0 && k % per_line == 0) out += "\n   ";
    out += " " + item;
    ++k;
  }
  out += "\n";
}

}  // namespace

ParseResult parse_document(const std::string& text) {
  return Parser(text).run();
}

std::string print_document(const StructureDoc& doc) {
  const int n = static_cast<int>(doc.elements.size());
  const int np = static_cast<int>(doc.points.size());
  std::string out;

  out += "quantale\n";
  emit_chunked(out, "  elements:", doc.elements, 12);
  out += "  bottom: " + doc.elements[doc.bottom] +
         "   top: " + doc.elements[doc.top] + "\n";

  std::vector<std::string> hasse;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !doc.leq[a * n + b]) continue;
      bool covered = false;
      for (int c = 0; c < n && !covered; ++c) {
        if (c == a || c == b) continue;
        covered = doc.leq[a * n + c] && doc.leq[c * n + b];
      }
      if (!covered) hasse.push_back(doc.elements[a] + "<=" + doc.elements[b]);
    }
  }
  emit_chunked(out, "  leq:", hasse, 8);

  if (star_is_meet(doc)) {
    out += "  star: meet\n";
  } else {
    std::vector<std::string> rows;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        rows.push_back(doc.elements[a] + "*" + doc.elements[b] + "=" +
                       doc.elements[doc.star[a * n + b]]);
      }
    }
    emit_chunked(out, "  star:", rows, 6);
  }

  out += "space\n";
  emit_chunked(out, "  points:", doc.points, 12);

  switch (doc.kind) {
    case Presentation::distance: {
      out += "distance\n";
      const PSubset full = (PSubset{1} << np) - 1;
      for (int x = 0; x < np; ++x) {
        for (PSubset a = 0; a <= full; ++a) {
          const Elem v = doc.distance[(static_cast<std::size_t>(x) << np) + a];
          bool print;
          if (a == 0) {
            print = v != doc.bottom;
          } else if (a == (PSubset{1} << x)) {
            print = v != doc.top;
          } else if ((a & (a - 1)) == 0) {
            print = true;
          } else {
            Elem join = doc.bottom;
            for (int y = 0; y < np; ++y) {
              if (((a >> y) & 1) == 0) continue;
              const Elem s =
                  doc.distance[(static_cast<std::size_t>(x) << np) +
                               (PSubset{1} << y)];
              const Elem j = order_lub(doc.leq, n, join, s);
              join = j < 0 ? join : j;
            }
            print = v != join;
          }
          if (!print) continue;
          std::string set = "{";
          bool first = true;
          for (int y = 0; y < np; ++y) {
            if (((a >> y) & 1) == 0) continue;
            if (!first) set += ",";
            set += doc.points[y];
            first = false;
          }
          set += "}";
          out += "  delta " + doc.points[x] + " " + set + " = " +
                 doc.elements[v] + "\n";
        }
      }
      break;
    }
    case Presentation::gauge: {
      out += "gauge\n";
      for (std::size_t k = 0; k < doc.metrics.size(); ++k) {
        out += "  metric " + doc.metric_names[k] + "\n";
        for (int x = 0; x < np; ++x) {
          for (int y = 0; y < np; ++y) {
            const Elem v = doc.metrics[k][static_cast<std::size_t>(x) * np + y];
            if (v == doc.top) continue;
            out += "    d " + doc.points[x] + " " + doc.points[y] + " = " +
                   doc.elements[v] + "\n";
          }
        }
      }
      break;
    }
    case Presentation::system: {
      out += "system\n";
      for (int x = 0; x < np; ++x) {
        if (doc.funcs[static_cast<std::size_t>(x)].empty()) continue;
        out += "  at " + doc.points[x] + "\n";
        const auto& names = doc.func_names[static_cast<std::size_t>(x)];
        const auto& funcs = doc.funcs[static_cast<std::size_t>(x)];
        for (std::size_t k = 0; k < funcs.size(); ++k) {
          out += "    phi " + names[k] + "\n";
          for (int y = 0; y < np; ++y) {
            const Elem v = funcs[k][static_cast<std::size_t>(y)];
            if (v == doc.top) continue;
            out += "      f " + doc.points[y] + " = " + doc.elements[v] + "\n";
          }
        }
      }
      break;
    }
  }
  return out;
}

Space load_space(const StructureDoc& doc, const Limits& limits) {
  const int n = static_cast<int>(doc.elements.size());
  LatticeSpec spec;
  spec.elements = doc.elements;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && doc.leq[a * n + b]) {
        spec.leq.emplace_back(doc.elements[a], doc.elements[b]);
      }
    }
  }
  Lattice lat = validate_lattice(spec);
  if (lat.bottom() != doc.bottom) {
    throw error(errc::bound_mismatch,
                "declared bottom " + doc.elements[doc.bottom] +
                    " but the least element is " + lat.name(lat.bottom()),
                {doc.elements[doc.bottom], lat.name(lat.bottom())});
  }
  if (lat.top() != doc.top) {
    throw error(errc::bound_mismatch,
                "declared top " + doc.elements[doc.top] +
                    " but the greatest element is " + lat.name(lat.top()),
                {doc.elements[doc.top], lat.name(lat.top())});
  }
  Quantale q = validate_quantale(std::move(lat), doc.star, limits);
  Carrier carrier = validate_carrier(doc.points);
  const int np = carrier.size();

  Space space{std::move(q), std::move(carrier), ApproachDistance{}};
  switch (doc.kind) {
    case Presentation::distance: {
      ApproachDistance d{space.carrier, doc.distance};
      validate_distance(space.quantale, d, limits);
      space.structure = std::move(d);
      break;
    }
    case Presentation::gauge: {
      GaugeBase base{space.carrier, doc.metric_names, {}};
      for (const auto& table : doc.metrics) {
        base.metrics.push_back(LMetric{np, table});
      }
      space.structure = validate_gauge_base(space.quantale, std::move(base),
                                            limits);
      break;
    }
    case Presentation::system: {
      SystemBase base{space.carrier, doc.func_names, doc.funcs};
      space.structure = validate_system_base(space.quantale, std::move(base));
      break;
    }
  }
  return space;
}

StructureDoc document_from_space(const Space& space) {
  const Quantale& q = space.quantale;
  const int n = q.size();
  StructureDoc doc;
  for (Elem a = 0; a < n; ++a) doc.elements.push_back(q.name(a));
  doc.bottom = q.bottom();
  doc.top = q.top();
  doc.leq.assign(static_cast<std::size_t>(n) * n, 0);
  doc.star.assign(static_cast<std::size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      doc.leq[a * n + b] = q.leq(a, b) ? 1 : 0;
      doc.star[a * n + b] = q.star(a, b);
    }
  }
  doc.points = space.carrier.points;
  doc.kind = space.presentation();
  switch (doc.kind) {
    case Presentation::distance:
      doc.distance = space.distance().values;
      break;
    case Presentation::gauge: {
      doc.metric_names = space.gauge().names;
      for (const LMetric& d : space.gauge().metrics) doc.metrics.push_back(d.v);
      break;
    }
    case Presentation::system:
      doc.func_names = space.system().names;
      doc.funcs = space.system().bases;
      break;
  }
  return doc;
}

}  // namespace qvt
