#include <iomanip>
#include <istream>
#include <ostream>

#include "cutpath/roadmap.hpp"
#include "text_reader.hpp"

namespace cutpath {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

void write_roadmap(std::ostream& os, const Roadmap& roadmap) {
  os << "dim " << roadmap.dim() << " vertices " << roadmap.num_vertices() << " edges "
     << roadmap.num_edges() << '\n';
  os << std::setprecision(17);
  for (std::size_t v = 0; v < roadmap.num_vertices(); ++v) {
    const auto& q = roadmap.vertex(static_cast<VertexId>(v));
    for (std::size_t i = 0; i < q.dim(); ++i) os << (i ? " " : "") << q[i];
    os << '\n';
  }
  for (std::size_t e = 0; e < roadmap.num_edges(); ++e) {
    const auto& edge = roadmap.edge(static_cast<EdgeId>(e));
    os << edge.u << ' ' << edge.v << ' ' << roadmap.prior(static_cast<EdgeId>(e)) << '\n';
  }
}

Roadmap read_roadmap(std::istream& is) {
  detail::LineReader reader(is);
  std::vector<std::string> tok;
  if (!reader.next(tok)) reader.fail("empty roadmap file");
  if (tok.size() != 6 || tok[0] != "dim" || tok[2] != "vertices" || tok[4] != "edges")
    reader.fail("expected header 'dim <d> vertices <n> edges <m>'");
  const auto dim = reader.to_int(tok[1]);
  const auto n = reader.to_int(tok[3]);
  const auto m = reader.to_int(tok[5]);
  if (dim < 1 || n < 0 || m < 0) reader.fail("header counts must be non-negative, dim >= 1");

  Roadmap roadmap(static_cast<std::size_t>(dim));
  for (long long i = 0; i < n; ++i) {
    if (!reader.next(tok)) reader.fail("unexpected end of file in vertex block");
    if (static_cast<long long>(tok.size()) != dim)
      reader.fail("vertex line must have " + std::to_string(dim) + " coordinates");
    std::vector<double> coords;
    for (const auto& t : tok) coords.push_back(reader.to_double(t));
    try {
      roadmap.add_vertex(Configuration(std::move(coords)));
    } catch (const std::invalid_argument& ex) {
      reader.fail(ex.what());
    }
  }
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(tok)) reader.fail("unexpected end of file in edge block");
    if (tok.size() != 3) reader.fail("edge line must be 'u v p'");
    const auto u = reader.to_int(tok[0]);
    const auto v = reader.to_int(tok[1]);
    const double p = reader.to_double(tok[2]);
    if (u >= v) reader.fail("edge endpoints must satisfy u < v");
    if (u < 0 || v >= n) reader.fail("edge endpoint out of range");
    if (!(p >= 0.0 && p <= 1.0)) reader.fail("edge probability outside [0,1]");
    try {
      roadmap.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), p);
    } catch (const std::exception& ex) {
      reader.fail(ex.what());
    }
  }
  if (reader.next(tok)) reader.fail("trailing content after edge block");
  return roadmap;
}

}  // namespace cutpath
