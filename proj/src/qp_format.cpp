#include "qpcc/qp_format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace qpcc {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

int to_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(line, "expected an integer, got '" + s + "'");
  }
}

struct PendingTerm {
  int line;
  Rational coeff;
  std::vector<std::string> names;
};

}  // namespace

QuiverWithPotential parse_qp(const std::string& text, std::optional<int> fallback_cap) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  std::optional<int> vertices, cap;
  std::vector<Arrow> arrows;
  std::vector<PendingTerm> terms;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.rfind("vertices:", 0) == 0) {
      if (vertices) throw ParseError(line_no, "duplicate vertices line");
      vertices = to_int(trim(line.substr(9)), line_no);
      if (*vertices < 0) throw ParseError(line_no, "negative vertex count");
    } else if (line.rfind("cap:", 0) == 0) {
      cap = to_int(trim(line.substr(4)), line_no);
      if (*cap < 0) throw ParseError(line_no, "negative cap");
    } else if (line.rfind("arrow ", 0) == 0) {
      auto colon = line.find(':');
      auto arrow_pos = line.find("->");
      if (colon == std::string::npos || arrow_pos == std::string::npos || arrow_pos < colon)
        throw ParseError(line_no, "malformed arrow line, expected 'arrow <name>: <s> -> <t>'");
      std::string name = trim(line.substr(6, colon - 6));
      if (name.empty() || name.find_first_of(" \t") != std::string::npos)
        throw ParseError(line_no, "bad arrow name '" + name + "'");
      int s = to_int(trim(line.substr(colon + 1, arrow_pos - colon - 1)), line_no);
      int t = to_int(trim(line.substr(arrow_pos + 2)), line_no);
      arrows.push_back(Arrow{name, s - 1, t - 1});
    } else if (line.rfind("term ", 0) == 0) {
      std::istringstream ts(line.substr(5));
      std::string c;
      ts >> c;
      PendingTerm pt{line_no, 0, {}};
      try {
        pt.coeff = Rational::parse(c);
      } catch (const std::exception&) {
        throw ParseError(line_no, "bad coefficient '" + c + "'");
      }
      for (std::string nm; ts >> nm;) pt.names.push_back(nm);
      if (pt.names.empty()) throw ParseError(line_no, "term without arrows");
      terms.push_back(std::move(pt));
    } else {
      throw ParseError(line_no, "unrecognized line '" + line + "'");
    }
  }
  if (!vertices) throw ParseError(line_no, "missing 'vertices:' line");
  if (!cap) cap = fallback_cap;
  if (!cap) throw ParseError(line_no, "missing 'cap:' line");

  auto q = std::make_shared<Quiver>(*vertices);
  for (auto& a : arrows) q->add_arrow(a.name, a.source, a.target);
  auto defects = q->validate();
  for (const auto& d : defects)
    if (d.rfind("warning:", 0) != 0) throw ParseError(line_no, "invalid quiver: " + d);

  Potential w(q, *cap);
  for (const auto& t : terms) {
    Path p;
    for (const auto& nm : t.names) {
      auto id = q->find_arrow(nm);
      if (!id) throw ParseError(t.line, "unknown arrow '" + nm + "'");
      p.arrows.push_back(static_cast<char16_t>(*id));
    }
    if (!p.valid_in(*q)) throw ParseError(t.line, "arrows do not compose");
    if (!p.is_cycle(*q)) throw ParseError(t.line, "term is not a cycle");
    w.add_cycle(p, t.coeff);
  }
  return QuiverWithPotential(q, std::move(w));
}

QuiverWithPotential parse_qp_file(const std::string& path, std::optional<int> fallback_cap) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_qp(ss.str(), fallback_cap);
}

std::string emit_qp(const QuiverWithPotential& qp) {
  const Quiver& q = *qp.quiver;
  std::ostringstream out;
  out << "vertices: " << q.num_vertices() << "\n";
  for (const auto& a : q.arrows()) out << "arrow " << a.name << ": " << a.source + 1 << " -> " << a.target + 1 << "\n";
  for (const auto& [p, c] : qp.potential.terms()) out << "term " << c << " " << path_to_string(q, p) << "\n";
  out << "cap: " << qp.cap() << "\n";
  return out.str();
}

}  // namespace qpcc
