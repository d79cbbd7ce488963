#include "yinyang/render.hpp"

#include <sstream>
#include <stdexcept>

#include "yinyang/reduction.hpp"

namespace yinyang {

std::string to_ascii(const Puzzle& p, const std::optional<Coloring>& c) {
  if (!c) return serialize_puzzle(p);
  if (c->rows() != p.rows() || c->cols() != p.cols()) throw std::invalid_argument("dimension mismatch");
  return serialize_coloring(*c, &p);
}

std::string to_svg(const Puzzle& p, const std::optional<Coloring>& c, const RenderOptions& o) {
  if (o.cell_size <= 0) throw std::invalid_argument("cell size must be positive");
  if (c && (c->rows() != p.rows() || c->cols() != p.cols())) throw std::invalid_argument("dimension mismatch");
  if (o.overlay && (o.overlay->rows != p.rows() || o.overlay->cols != p.cols()))
    throw std::invalid_argument("overlay dimension mismatch");
  const int s = o.cell_size;
  const int w = p.cols() * s, h = p.rows() * s;
  const double rad = s * 0.4;
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  for (int r = 0; r < p.rows(); ++r)
    for (int k = 0; k < p.cols(); ++k) {
      const char* fill = "#ffffff";
      std::string extra;
      if (o.overlay) {
        const CellInfo& info = o.overlay->at(r, k);
        if (info.kind == Provenance::ExceptionalCell) {
          fill = "#ffd54f";
          extra = " class=\"exceptional\"";
        } else if (info.important) {
          fill = "#c8e6c9";
          extra = " class=\"important\"";
        }
      }
      out << "<rect x=\"" << k * s << "\" y=\"" << r * s << "\" width=\"" << s << "\" height=\"" << s
          << "\" fill=\"" << fill << "\" stroke=\"#999999\" stroke-width=\"1\"" << extra << "/>\n";
    }
  for (int r = 0; r < p.rows(); ++r)
    for (int k = 0; k < p.cols(); ++k) {
      bool given = !p.is_empty(r, k);
      if (!given && !c) continue;
      Color col = given ? to_color(p.at(r, k)) : c->at(r, k);
      out << "<circle cx=\"" << k * s + s / 2.0 << "\" cy=\"" << r * s + s / 2.0 << "\" r=\"" << rad
          << "\" fill=\"" << (col == Color::Black ? "#000000" : "#ffffff") << "\" stroke=\"#000000\" stroke-width=\"1.5\"";
      if (!given && o.show_given_vs_filled) out << " stroke-dasharray=\"2,2\"";
      out << "/>\n";
    }
  out << "</svg>\n";
  return out.str();
}

}  // namespace yinyang
