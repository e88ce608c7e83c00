#include "tropabel/svg.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace tropabel {

namespace {

std::string num(const Rat& r) {
  const double v = r.raw().get_d();
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 4);
  std::string s(buf, res.ptr);
  while (!s.empty() && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s == "-0" ? "0" : s;
}

std::string point(const RVec2& p) { return num(p.x) + "," + num(p.y); }

}  // namespace

std::vector<Segment> fundamental_segments(const ParamCurve& pc) {
  const auto pos = vertex_positions(pc);
  const RMat2& Sinv = pc.torus.S_inverse();
  std::vector<Segment> out;
  for (const auto& e : pc.edges) {
    const RVec2 a = pos[static_cast<std::size_t>(e.u)];
    const RVec2 dir = e.length * RVec2{Rat(e.slope.x), Rat(e.slope.y)};
    const RVec2 ua = Sinv * a;
    const RVec2 du = Sinv * dir;
    // Parameters in (0,1) where a lattice coordinate crosses an integer.
    std::set<Rat> cuts{Rat(0), Rat(1)};
    for (int j = 0; j < 2; ++j) {
      if (du[j].is_zero()) continue;
      const Rat lo = std::min(ua[j], ua[j] + du[j]);
      const Rat hi = std::max(ua[j], ua[j] + du[j]);
      for (BigInt m = lo.floor() + 1; Rat(m) < hi; ++m) cuts.insert((Rat(m) - ua[j]) / du[j]);
    }
    const std::vector<Rat> ts(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      const Rat mid = (ts[i] + ts[i + 1]) / Rat(2);
      const RVec2 umid = ua + mid * du;
      const IVec2 shift{BigInt(umid.x.floor()).get_si(), BigInt(umid.y.floor()).get_si()};
      const RVec2 back = pc.torus.lattice_vector(shift);
      out.push_back(Segment{a + ts[i] * dir - back, a + ts[i + 1] * dir - back, weight(e.slope)});
    }
  }
  return out;
}

std::string render_svg(const ParamCurve& pc, const std::string& title) {
  const RMat2& S = pc.torus.S();
  const RVec2 s1 = S.col(0);
  const RVec2 s2 = S.col(1);
  const RVec2 origin{Rat(0), Rat(0)};
  const std::vector<RVec2> corners{origin, s1, s1 + s2, s2};
  Rat minx = corners[0].x, maxx = corners[0].x, miny = corners[0].y, maxy = corners[0].y;
  for (const auto& c : corners) {
    minx = std::min(minx, c.x);
    maxx = std::max(maxx, c.x);
    miny = std::min(miny, c.y);
    maxy = std::max(maxy, c.y);
  }
  const Rat width = maxx - minx;
  const Rat height = maxy - miny;
  const Rat stroke = std::max(width, height) / Rat(200);

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(minx) + " " + num(-maxy) + " " +
                    num(width) + " " + num(height) + "\">\n";
  if (!title.empty()) svg += "<title>" + title + "</title>\n";
  svg += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke-linecap=\"round\">\n";
  svg += "<polygon points=\"" + point(corners[0]) + " " + point(corners[1]) + " " + point(corners[2]) + " " +
         point(corners[3]) + "\" stroke=\"#999\" stroke-width=\"" + num(stroke) + "\"/>\n";
  for (const auto& seg : fundamental_segments(pc)) {
    svg += "<line x1=\"" + num(seg.from.x) + "\" y1=\"" + num(seg.from.y) + "\" x2=\"" + num(seg.to.x) + "\" y2=\"" +
           num(seg.to.y) + "\" stroke=\"#1f4e9c\" stroke-width=\"" + num(stroke * Rat(seg.weight)) + "\"/>\n";
  }
  const auto pos = vertex_positions(pc);
  for (const auto& leg : pc.legs) {
    const TorusPoint p = reduce_point(pc.torus, pos[static_cast<std::size_t>(leg.vertex)]);
    svg += "<circle cx=\"" + num(p.coords.x) + "\" cy=\"" + num(p.coords.y) + "\" r=\"" + num(stroke * Rat(3)) +
           "\" fill=\"#c0392b\"/>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace tropabel
