#include "dsg/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <utility>
#include <vector>

#include "dsg/errors.hpp"
#include "dsg/polynomial.hpp"

namespace dsg::io {

namespace {

void write_root_row(std::ostream& out, const RootRow& r) {
  out << r.poly_id << ',' << r.lo.get_num() << ',' << r.lo.get_den() << ','
      << r.hi.get_num() << ',' << r.hi.get_den() << '\n';
}

}  // namespace

void write_roots_csv(std::ostream& out, const std::vector<RootRow>& rows) {
  out << "poly_id,lo_num,lo_den,hi_num,hi_den\n";
  for (const RootRow& r : rows) write_root_row(out, r);
}

void write_sweep_csv(std::ostream& out, long game_id,
                     const std::vector<thresh::SweepRow>& rows) {
  out << "game_id,lambda_num,lambda_den,iterations,wall_ms\n";
  for (const auto& r : rows) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", r.wall_ms);
    out << game_id << ',' << r.lambda.get_num() << ',' << r.lambda.get_den()
        << ',' << r.iterations << ',' << buf << '\n';
  }
}

namespace {

void write_svg(std::ostream& svg, const std::vector<double>& xs) {
  const double width = 900, height = 240, x0 = 40, x1 = 860, ymid = 120;
  double range = 2.5;
  for (double x : xs) range = std::max(range, std::abs(x) + 0.5);
  auto map_x = [&](double x) {
    return x0 + (x + range) / (2 * range) * (x1 - x0);
  };
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  svg << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"#ffffff\"/>\n";
  svg << "<line x1=\"" << x0 << "\" y1=\"" << ymid << "\" x2=\"" << x1
      << "\" y2=\"" << ymid << "\" stroke=\"#444444\"/>\n";
  for (int t = -static_cast<int>(range); t <= static_cast<int>(range); ++t) {
    double cx = map_x(t);
    svg << "<line x1=\"" << cx << "\" y1=\"" << ymid - 4 << "\" x2=\"" << cx
        << "\" y2=\"" << ymid + 4 << "\" stroke=\"#444444\"/>\n";
    svg << "<text x=\"" << cx << "\" y=\"" << ymid + 18
        << "\" font-size=\"10\" text-anchor=\"middle\">" << t << "</text>\n";
  }
  svg << "<line x1=\"" << map_x(1.0) << "\" y1=\"20\" x2=\"" << map_x(1.0)
      << "\" y2=\"" << height - 20 << "\" stroke=\"#d62728\"/>\n";
  const std::size_t cap = 20000;
  const std::size_t stride = xs.empty() ? 1 : std::max<std::size_t>(1, xs.size() / cap);
  for (std::size_t i = 0; i < xs.size(); i += stride) {
    double jitter =
        static_cast<double>((i * 2654435761ULL) % 141ULL) - 70.0;
    char buf[96];
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"1\" fill=\"#1f77b4\" "
                  "fill-opacity=\"0.25\"/>\n",
                  map_x(xs[i]), ymid + jitter * 0.9);
    svg << buf;
  }
  svg << "</svg>\n";
}

}  // namespace

RootplotSummary rootplot(unsigned long n, unsigned long w, unsigned grid,
                         std::ostream& roots_csv, std::ostream& grid_csv,
                         std::ostream& svg, unsigned long long guard) {
  if (grid < 2 || grid > 4096)
    throw PreconditionViolated("grid resolution out of range (2..4096)");
  roots_csv << "poly_id,lo_num,lo_den,hi_num,hi_den\n";
  grid_csv << "re,im,min_abs\n";
  RootplotSummary sum;
  sum.min_distance_lo = Rational(0);
  if (w == 0) {
    write_svg(svg, {});
    return sum;
  }
  const Int span(static_cast<long>(2 * w + 1));
  const Int total = pow_int(span, n + 1);
  if (total > Int(static_cast<unsigned long>(guard)))
    throw SearchSpaceTooLarge("coefficient space of " + total.get_str() +
                              " vectors exceeds the guard");
  const unsigned long long stride = std::max<unsigned long long>(
      1, (total.get_ui() - 1) / 2000);
  const long long wl = static_cast<long long>(w);
  std::vector<long long> a(n + 1, -wl);
  std::vector<poly::Polynomial> sampled;
  std::vector<double> xs;
  const Rational one(1), width_cap(Int(1), Int(1024));
  unsigned long long id = 0;
  for (;; ++id) {
    bool all_zero = std::all_of(a.begin(), a.end(),
                                [](long long c) { return c == 0; });
    if (!all_zero) {
      sum.polys += 1;
      std::vector<Int> coeffs;
      coeffs.reserve(a.size());
      for (long long c : a) coeffs.emplace_back(static_cast<long>(c));
      poly::Polynomial p{std::move(coeffs)};
      if (id % stride == 0) sampled.push_back(p);
      // Strip the root at 1 so isolation never sees it.
      poly::Polynomial q = p;
      int order_at_one = 0;
      for (;;) {
        Int rem;
        poly::Polynomial quot = q.divide_by_x_minus_one(rem);
        if (rem != 0) break;
        q = std::move(quot);
        ++order_at_one;
      }
      std::vector<RootRow> rows;
      if (q.degree() >= 1) {
        poly::Polynomial sf = poly::square_free_part(q);
        for (poly::RootInterval iv : poly::isolate_real_roots(sf)) {
          iv = poly::refine_away_from(sf, iv, one);
          iv = poly::refine_root_interval(sf, iv, width_cap);
          Rational dist = iv.hi < one ? Rational(one - iv.hi)
                                      : Rational(iv.lo - one);
          if (!sum.gap_defined || dist < sum.min_distance_lo)
            sum.min_distance_lo = dist;
          sum.gap_defined = true;
          xs.push_back((iv.lo.get_d() + iv.hi.get_d()) / 2);
          rows.push_back({id, std::move(iv.lo), std::move(iv.hi)});
        }
      }
      if (order_at_one > 0) {
        auto at = std::find_if(rows.begin(), rows.end(), [&](const RootRow& r) {
          return r.lo > one;
        });
        rows.insert(at, {id, one, one});
        xs.push_back(1.0);
      }
      sum.roots += rows.size();
      for (const RootRow& r : rows) write_root_row(roots_csv, r);
    }
    // Odometer: last coefficient fastest.
    std::size_t pos = a.size();
    while (pos > 0 && a[pos - 1] == wl) a[--pos] = -wl;
    if (pos == 0) break;
    ++a[pos - 1];
  }
  for (unsigned gy = 0; gy < grid; ++gy) {
    double im = -2.0 + 4.0 * gy / (grid - 1);
    for (unsigned gx = 0; gx < grid; ++gx) {
      double re = -2.0 + 4.0 * gx / (grid - 1);
      double best = 0;
      bool first = true;
      for (const poly::Polynomial& p : sampled) {
        double v = p.abs_at_complex(re, im);
        if (first || v < best) {
          best = v;
          first = false;
        }
      }
      char buf[80];
      std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g\n", re, im, best);
      grid_csv << buf;
    }
  }
  write_svg(svg, xs);
  return sum;
}

}  // namespace dsg::io
