#pragma once

// Line-oriented file formats. '#' starts a comment anywhere on a line.
//
// Instance:    p rd <n> <m> <lambda>
//              w <v> <weight>        (optional, default weight 1)
//              e <u> <v>             (exactly m lines, duplicates rejected)
// Solution:    s yes | s no
//              d <u> <v>             (one line per non-sink)
// Fractional:  z <p>/<q>
//              f <u> <v> <p>/<q>     (nonzero edge flows)
// CNF:         DIMACS (p cnf <vars> <clauses>, clauses terminated by 0,
//              exactly three literals each)
// MMO:         p mmo <n> <m> <r>  with  e <u> <v> <w>
// TVDP:        p tvdp <n> <m> <s1> <t1> <s2> <t2>  with  e <u> <v>

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rd/core.hpp"
#include "rd/fractional.hpp"
#include "rd/gadget_mmo.hpp"
#include "rd/gadget_sat.hpp"
#include "rd/gadget_tvdp.hpp"

namespace rd {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + what),
        line(line_no) {}
};

namespace io_detail {

// Comment-stripped, tokenized lines with their 1-based line numbers.
inline std::vector<std::pair<int, std::vector<std::string>>> tokenize(
    std::istream& in) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (!tokens.empty()) out.emplace_back(line_no, std::move(tokens));
  }
  return out;
}

inline long long to_int(const std::string& tok, int line_no) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::logic_error&) {
    throw ParseError(line_no, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace io_detail

inline Instance parse_instance(std::istream& in) {
  auto lines = io_detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty input");
  auto [hline, header] = lines.front();
  if (header.size() != 5 || header[0] != "p" || header[1] != "rd")
    throw ParseError(hline, "expected header 'p rd <n> <m> <lambda>'");
  const long long n = io_detail::to_int(header[2], hline);
  const long long m = io_detail::to_int(header[3], hline);
  const long long lambda = io_detail::to_int(header[4], hline);
  if (n < 0 || m < 0) throw ParseError(hline, "negative size");
  if (lambda < 1) throw ParseError(hline, "lambda must be at least 1");

  DelegationGraph g;
  for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
  auto check_vertex = [&](long long v, int line_no) {
    if (v < 1 || v > n)
      throw ParseError(line_no, "unknown vertex id " + std::to_string(v));
    return (VertexId)v;
  };

  long long edge_lines = 0;
  std::set<VertexId> weighted;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto& [line_no, tokens] = lines[i];
    if (tokens[0] == "w") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'w <v> <weight>'");
      VertexId v = check_vertex(io_detail::to_int(tokens[1], line_no), line_no);
      long long w = io_detail::to_int(tokens[2], line_no);
      if (w < 1) throw ParseError(line_no, "weight must be positive");
      if (!weighted.insert(v).second)
        throw ParseError(line_no, "duplicate weight line for vertex " +
                                      std::to_string(v));
      g.set_weight(v, w);
    } else if (tokens[0] == "e") {
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      VertexId u = check_vertex(io_detail::to_int(tokens[1], line_no), line_no);
      VertexId v = check_vertex(io_detail::to_int(tokens[2], line_no), line_no);
      if (!g.add_edge(u, v))
        throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " +
                                      std::to_string(v));
      ++edge_lines;
    } else {
      throw ParseError(line_no, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (edge_lines != m)
    throw ParseError(hline, "header declares " + std::to_string(m) +
                                " edges, found " + std::to_string(edge_lines));
  return Instance{std::move(g), lambda};
}

inline void serialize_instance(const Instance& inst, std::ostream& out) {
  const DelegationGraph& g = inst.graph;
  out << "p rd " << g.n() << " " << g.m() << " " << inst.lambda << "\n";
  for (VertexId v : g.vertex_ids())
    if (g.weight(v) != 1) out << "w " << v << " " << g.weight(v) << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

inline void serialize_solution(const std::optional<DelegationSolution>& sol,
                               std::ostream& out) {
  if (!sol) {
    out << "s no\n";
    return;
  }
  out << "s yes\n";
  for (const auto& [v, w] : sol->choice) out << "d " << v << " " << w << "\n";
}

inline std::optional<DelegationSolution> parse_solution(std::istream& in) {
  auto lines = io_detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty solution");
  auto& [hline, header] = lines.front();
  if (header.size() != 2 || header[0] != "s")
    throw ParseError(hline, "expected 's yes' or 's no'");
  if (header[1] == "no") {
    if (lines.size() > 1) throw ParseError(lines[1].first, "trailing lines");
    return std::nullopt;
  }
  if (header[1] != "yes") throw ParseError(hline, "expected 'yes' or 'no'");
  DelegationSolution sol;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto& [line_no, tokens] = lines[i];
    if (tokens.size() != 3 || tokens[0] != "d")
      throw ParseError(line_no, "expected 'd <u> <v>'");
    VertexId u = (VertexId)io_detail::to_int(tokens[1], line_no);
    VertexId v = (VertexId)io_detail::to_int(tokens[2], line_no);
    if (!sol.choice.emplace(u, v).second)
      throw ParseError(line_no, "duplicate delegation for vertex " +
                                    std::to_string(u));
  }
  return sol;
}

inline void serialize_fractional(const FractionalSolution& sol,
                                 std::ostream& out) {
  out << "z " << sol.objective.str() << "\n";
  for (const auto& [edge, f] : sol.flow)
    out << "f " << edge.first << " " << edge.second << " " << f.str() << "\n";
}

inline CnfFormula parse_dimacs(std::istream& in) {
  auto raw = io_detail::tokenize(in);
  CnfFormula f;
  long long declared_clauses = -1;
  std::vector<int> pending;
  int clause_line = 0;
  for (auto& [line_no, tokens] : raw) {
    if (tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (declared_clauses >= 0) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "cnf")
        throw ParseError(line_no, "expected 'p cnf <vars> <clauses>'");
      f.num_vars = (int)io_detail::to_int(tokens[2], line_no);
      declared_clauses = io_detail::to_int(tokens[3], line_no);
      continue;
    }
    if (declared_clauses < 0)
      throw ParseError(line_no, "clause before 'p cnf' header");
    for (const std::string& tok : tokens) {
      long long lit = io_detail::to_int(tok, line_no);
      if (lit == 0) {
        if (pending.size() != 3)
          throw ParseError(line_no, "clauses must have exactly 3 literals");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        if (pending.empty()) clause_line = line_no;
        pending.push_back((int)lit);
      }
    }
  }
  if (!pending.empty())
    throw ParseError(clause_line, "unterminated clause");
  if (declared_clauses < 0) throw ParseError(0, "missing 'p cnf' header");
  if ((long long)f.clauses.size() != declared_clauses)
    throw ParseError(0, "clause count does not match the header");
  try {
    validate_formula(f);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return f;
}

inline MmoInstance parse_mmo(std::istream& in) {
  auto lines = io_detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty input");
  auto& [hline, header] = lines.front();
  if (header.size() != 5 || header[0] != "p" || header[1] != "mmo")
    throw ParseError(hline, "expected header 'p mmo <n> <m> <r>'");
  MmoInstance src;
  src.n = (int)io_detail::to_int(header[2], hline);
  const long long m = io_detail::to_int(header[3], hline);
  src.r = io_detail::to_int(header[4], hline);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto& [line_no, tokens] = lines[i];
    if (tokens.size() != 4 || tokens[0] != "e")
      throw ParseError(line_no, "expected 'e <u> <v> <w>'");
    src.edges.push_back({(VertexId)io_detail::to_int(tokens[1], line_no),
                         (VertexId)io_detail::to_int(tokens[2], line_no),
                         io_detail::to_int(tokens[3], line_no)});
  }
  if ((long long)src.edges.size() != m)
    throw ParseError(hline, "edge count does not match the header");
  try {
    validate_mmo(src);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return src;
}

inline TvdpInstance parse_tvdp(std::istream& in) {
  auto lines = io_detail::tokenize(in);
  if (lines.empty()) throw ParseError(0, "empty input");
  auto& [hline, header] = lines.front();
  if (header.size() != 8 || header[0] != "p" || header[1] != "tvdp")
    throw ParseError(hline,
                     "expected header 'p tvdp <n> <m> <s1> <t1> <s2> <t2>'");
  TvdpInstance src;
  src.n = (int)io_detail::to_int(header[2], hline);
  const long long m = io_detail::to_int(header[3], hline);
  src.s1 = (VertexId)io_detail::to_int(header[4], hline);
  src.t1 = (VertexId)io_detail::to_int(header[5], hline);
  src.s2 = (VertexId)io_detail::to_int(header[6], hline);
  src.t2 = (VertexId)io_detail::to_int(header[7], hline);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto& [line_no, tokens] = lines[i];
    if (tokens.size() != 3 || tokens[0] != "e")
      throw ParseError(line_no, "expected 'e <u> <v>'");
    auto edge = std::make_pair((VertexId)io_detail::to_int(tokens[1], line_no),
                               (VertexId)io_detail::to_int(tokens[2], line_no));
    if (!src.edges.insert(edge).second)
      throw ParseError(line_no, "duplicate edge");
  }
  if ((long long)src.edges.size() != m)
    throw ParseError(hline, "edge count does not match the header");
  try {
    validate_tvdp(src);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
  return src;
}

}  // namespace rd
