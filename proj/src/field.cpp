#include "korn/field.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace korn {

namespace {

long power_long(long base, int exp) {
  long result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

}  // namespace

SiteIndexer::SiteIndexer(const GroupSpec& spec, long period)
    : spec_(&spec), period_(period) {
  if (period <= 0 || period % spec.m0() != 0)
    throw config_error("period must be a positive multiple of m0 = " +
                       std::to_string(spec.m0()));
  reps_ = period / spec.m0();
  sites_ = spec.coset_count() * power_long(reps_, spec.d2());
}

long SiteIndexer::site_of(const CanonicalElement& e) const {
  long site = e.coset;
  for (int i = 0; i < spec_->d2(); ++i) {
    long a = ((e.exponents(i) % reps_) + reps_) % reps_;
    site = site * reps_ + a;
  }
  return site;
}

CanonicalElement SiteIndexer::element_of(long site) const {
  CanonicalElement e;
  e.exponents.resize(spec_->d2());
  for (int i = spec_->d2() - 1; i >= 0; --i) {
    e.exponents(i) = static_cast<int>(site % reps_);
    site /= reps_;
  }
  e.coset = static_cast<int>(site);
  return e;
}

PeriodicDisplacement::PeriodicDisplacement(GroupSpecPtr spec, long period)
    : spec_(std::move(spec)), indexer_(*spec_, period) {
  values_ = Mat::Zero(spec_->d(), indexer_.site_count());
}

PeriodicDisplacement PeriodicDisplacement::random(GroupSpecPtr spec,
                                                  long period,
                                                  std::uint64_t seed) {
  PeriodicDisplacement u(std::move(spec), period);
  UniformSampler rng(seed);
  for (long site = 0; site < u.site_count(); ++site)
    for (int comp = 0; comp < u.values_.rows(); ++comp)
      u.values_(comp, site) = rng.symmetric();
  return u;
}

PeriodicDisplacement PeriodicDisplacement::lift(long period) const {
  if (period % this->period() != 0)
    throw config_error("lift target period must be a multiple of the period");
  PeriodicDisplacement out(spec_, period);
  for (long site = 0; site < out.site_count(); ++site)
    out.values_.col(site) = value(out.element_of(site));
  return out;
}

Vec PeriodicDisplacement::flatten() const {
  Vec flat(values_.size());
  for (long site = 0; site < site_count(); ++site)
    flat.segment(site * values_.rows(), values_.rows()) = values_.col(site);
  return flat;
}

PeriodicDisplacement PeriodicDisplacement::from_flat(GroupSpecPtr spec,
                                                     long period,
                                                     const Vec& flat) {
  PeriodicDisplacement u(std::move(spec), period);
  if (flat.size() != u.values_.size())
    throw config_error("from_flat: wrong vector length");
  for (long site = 0; site < u.site_count(); ++site)
    u.values_.col(site) = flat.segment(site * u.values_.rows(),
                                       u.values_.rows());
  return u;
}

double inner_product(const PeriodicDisplacement& u,
                     const PeriodicDisplacement& v) {
  if (u.spec() != v.spec())
    throw config_error("inner_product: fields live on different specs");
  long common = std::lcm(u.period(), v.period());
  if (u.period() == v.period() && u.period() == common) {
    double sum = (u.values().cwiseProduct(v.values())).sum();
    return sum / static_cast<double>(u.site_count());
  }
  PeriodicDisplacement ul = u.lift(common);
  PeriodicDisplacement vl = v.lift(common);
  return inner_product(ul, vl);
}

Vec deformation(const PeriodicDisplacement& u, const CanonicalElement& g) {
  const GroupSpec& spec = *u.spec();
  return act(spec.reconstruct(g), spec.base_point() + u.value(g));
}

std::vector<Vec> discrete_derivative(const PeriodicDisplacement& u,
                                     const RangeSet& r,
                                     const CanonicalElement& g) {
  const GroupSpec& spec = *u.spec();
  Vec ug = u.value(g);
  std::vector<Vec> stencil;
  stencil.reserve(r.size());
  for (const auto& h : r.elements)
    stencil.push_back(u.value(spec.multiply(g, h)) -
                      spec.rotation_of(h).transpose() * ug);
  return stencil;
}

void write_field_csv(const PeriodicDisplacement& u, std::ostream& out) {
  const GroupSpec& spec = *u.spec();
  out << "coset_index";
  for (int i = 1; i <= spec.d2(); ++i) out << ",a_" << i;
  for (int i = 1; i <= spec.d(); ++i) out << ",u_" << i;
  out << "\n";
  char buf[40];
  for (long site = 0; site < u.site_count(); ++site) {
    CanonicalElement e = u.element_of(site);
    out << e.coset;
    for (int i = 0; i < spec.d2(); ++i) out << "," << e.exponents(i);
    for (int i = 0; i < spec.d(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", u.values()(i, site));
      out << "," << buf;
    }
    out << "\n";
  }
}

PeriodicDisplacement read_field_csv(GroupSpecPtr spec, std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw config_error("field CSV: missing header");
  {
    std::ostringstream expect;
    expect << "coset_index";
    for (int i = 1; i <= spec->d2(); ++i) expect << ",a_" << i;
    for (int i = 1; i <= spec->d(); ++i) expect << ",u_" << i;
    if (line != expect.str())
      throw config_error("field CSV: unexpected header '" + line + "'");
  }
  struct Row {
    CanonicalElement e;
    Vec u;
  };
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string cell;
    Row row;
    row.e.exponents.resize(spec->d2());
    row.u.resize(spec->d());
    if (!std::getline(ls, cell, ',')) break;
    row.e.coset = std::stoi(cell);
    for (int i = 0; i < spec->d2(); ++i) {
      if (!std::getline(ls, cell, ','))
        throw config_error("field CSV: short row");
      row.e.exponents(i) = std::stoi(cell);
    }
    for (int i = 0; i < spec->d(); ++i) {
      if (!std::getline(ls, cell, ','))
        throw config_error("field CSV: short row");
      row.u(i) = std::stod(cell);
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw config_error("field CSV: no data rows");
  long sites = static_cast<long>(rows.size());
  if (sites % spec->coset_count() != 0)
    throw config_error("field CSV: row count does not match the coset count");
  long cells = sites / spec->coset_count();
  long reps = 1;
  if (spec->d2() > 0) {
    reps = std::lround(std::pow(static_cast<double>(cells),
                                1.0 / spec->d2()));
    while (power_long(reps, spec->d2()) < cells) ++reps;
    if (power_long(reps, spec->d2()) != cells)
      throw config_error("field CSV: row count is not |C_m0| * k^d2");
  } else if (cells != 1) {
    throw config_error("field CSV: row count is not |C_m0|");
  }
  PeriodicDisplacement u(spec, reps * spec->m0());
  std::vector<bool> filled(static_cast<std::size_t>(sites), false);
  for (const Row& row : rows) {
    if (row.e.coset < 0 || row.e.coset >= spec->coset_count())
      throw config_error("field CSV: coset index out of range");
    for (int i = 0; i < spec->d2(); ++i)
      if (row.e.exponents(i) < 0 || row.e.exponents(i) >= reps)
        throw config_error("field CSV: exponent out of range");
    long site = u.site_of(row.e);
    if (filled[static_cast<std::size_t>(site)])
      throw config_error("field CSV: duplicate site");
    filled[static_cast<std::size_t>(site)] = true;
    u.values().col(site) = row.u;
  }
  return u;
}

}  // namespace korn
