#include "zns/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>

#include "zns/error.hpp"

namespace zns {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string point_string(const ComplexPoint& z) {
  if (z.is_infinite()) return "inf";
  std::ostringstream out;
  out.precision(17);
  out << z.value().real() << (z.value().imag() < 0 ? "" : "+") << z.value().imag() << "i";
  return out.str();
}

// Nontrivial elements of a factor used by the absorption check: generators, their
// inverses and the torsion list.
std::vector<std::pair<std::string, Mobius>> movers(const FactorGroup& f) {
  std::vector<std::pair<std::string, Mobius>> out;
  for (std::size_t i = 0; i < f.maps.size(); ++i) {
    out.emplace_back(f.generators[i].name, f.maps[i]);
    out.emplace_back(f.generators[i].name + "^-1", f.maps[i].inverse());
  }
  for (const TorsionElement& t : f.torsion) out.emplace_back(word_to_string(t.word, f.generators), t.map);
  return out;
}

Circle separator_for(const std::vector<FactorGroup>& factors, std::size_t t) {
  const FactorGroup& f = factors[t];
  double gap = kInf;
  for (std::size_t s = 0; s < t; ++s) {
    const double d = std::abs(factors[s].center.value() - f.center.value());
    gap = std::min(gap, d - factors[s].radius - f.radius);
  }
  const double r = std::max(f.radius + gap / 2.0, 0.5 * f.radius);
  return Circle::round(f.center.value(), r);
}

Assembly glue(std::vector<FactorGroup> factors, int n, bool extended, Layout layout) {
  Assembly out;
  out.n = n;
  out.extended = extended;
  out.layout = layout;
  for (std::size_t t = 1; t < factors.size(); ++t) out.separators.push_back(separator_for(factors, t));
  std::vector<FactorSpec> specs;
  for (const FactorGroup& f : factors) specs.push_back(f.spec);
  out.presentation = presentation(specs);
  for (const FactorGroup& f : factors) {
    out.generator_maps.insert(out.generator_maps.end(), f.maps.begin(), f.maps.end());
  }
  out.factors = std::move(factors);
  return out;
}

Assembly place(const std::vector<FactorSpec>& specs, int n, bool extended, Layout layout,
               const FactorParams& params) {
  if (!(layout.radius > 0.0) || !(layout.spacing > 0.0)) {
    throw Error(ErrorKind::PlacementFailure, "layout needs positive spacing and radius");
  }
  std::string last;
  for (int attempt = 0; attempt < 3; ++attempt, layout.spacing *= 2.0) {
    if (specs.size() > 1 && layout.spacing - 2.0 * layout.radius < 0.1 * layout.radius) {
      last = "localization discs closer than 10% of the radius";
      continue;
    }
    try {
      std::vector<FactorGroup> factors;
      for (std::size_t t = 0; t < specs.size(); ++t) {
        factors.push_back(build_factor(specs[t], n, cplx{layout.spacing * static_cast<double>(t), 0.0},
                                       layout.radius, params));
      }
      Assembly a = glue(std::move(factors), n, extended, layout);
      a.certificate = verify(a, 64, 1e-9);
      return a;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::PlacementFailure && e.kind() != ErrorKind::CertificateFailure) throw;
      last = e.what();
    }
  }
  throw Error(ErrorKind::PlacementFailure, "three attempts failed; last: " + last);
}

void check(bool ok, int step, const std::string& what, const ComplexPoint& z, double value) {
  if (ok) return;
  std::ostringstream out;
  out.precision(6);
  out << what << " at sample " << point_string(z) << " (margin " << value << ")";
  throw CertificateError(step, out.str());
}

}  // namespace

std::vector<FactorSpec> Assembly::specs() const {
  std::vector<FactorSpec> out;
  for (const FactorGroup& f : factors) out.push_back(f.spec);
  return out;
}

Assembly assemble(const ConformalSignature& sig, Layout layout, const FactorParams& params) {
  require_admissible(sig);
  return place(factor_specs(sig), sig.n, false, layout, params);
}

Assembly assemble(const ExtendedSignature& sig, Layout layout, const FactorParams& params) {
  require_admissible(sig);
  return place(factor_specs(sig), sig.n, true, layout, params);
}

Assembly assemble_from_factors(std::vector<FactorGroup> factors, int n, bool extended) {
  Layout layout;
  if (!factors.empty()) layout.radius = factors.front().radius;
  if (factors.size() > 1) {
    layout.spacing = std::abs(factors[1].center.value() - factors[0].center.value());
  }
  return glue(std::move(factors), n, extended, layout);
}

Certificate verify(const Assembly& a, int samples_per_arc, double margin) {
  Certificate cert;
  cert.worst_margin = kInf;
  for (std::size_t t = 1; t < a.factors.size(); ++t) {
    const int step = static_cast<int>(t);
    const Circle& sigma = a.separators[t - 1];
    const FactorGroup& fresh = a.factors[t];
    CertificateStep rec;
    rec.step = step;
    rec.worst_margin = kInf;
    rec.worst_absorption = kInf;
    const std::vector<ComplexPoint> sigma_samples = sigma.samples(samples_per_arc);

    auto note = [&](double value, const std::string& what, const ComplexPoint& z) {
      rec.samples++;
      rec.worst_margin = std::min(rec.worst_margin, value);
      check(value > margin, step, what, z, value);
    };

    // (a) the inner disc of Σ_t and Σ_t itself miss every earlier envelope
    for (std::size_t s = 0; s < t; ++s) {
      for (const Region& r : a.factors[s].core) {
        for (const ComplexPoint& z : r.boundary_samples(samples_per_arc)) {
          note(sigma.signed_distance(z), "envelope of factor " + std::to_string(s) + " meets the inner disc", z);
        }
      }
    }
    for (const ComplexPoint& z : sigma_samples) {
      for (std::size_t s = 0; s < t; ++s) {
        note(envelope_distance(a.factors[s].core, z),
             "separator meets the envelope of factor " + std::to_string(s), z);
      }
    }
    // (b) the outer disc of Σ_t and Σ_t itself miss the new envelope
    for (const Region& r : fresh.core) {
      for (const ComplexPoint& z : r.boundary_samples(samples_per_arc)) {
        note(-sigma.signed_distance(z), "new envelope leaves the inner disc", z);
      }
    }
    for (const ComplexPoint& z : sigma_samples) {
      note(envelope_distance(fresh.core, z), "separator meets the new envelope", z);
    }
    // (c) Σ_t lies in each fundamental domain: its images under nontrivial factor
    // elements fall into that factor's envelope
    for (std::size_t s = 0; s <= t; ++s) {
      const FactorGroup& f = a.factors[s];
      for (const auto& [name, g] : movers(f)) {
        for (const ComplexPoint& z : sigma_samples) {
          const double depth = -envelope_distance(f.core, g(z));
          rec.samples++;
          rec.worst_absorption = std::min(rec.worst_absorption, depth);
          check(depth > margin, step, name + " image of the separator escapes the envelope of factor " +
                                          std::to_string(s), z, depth);
        }
      }
    }
    cert.samples += rec.samples;
    cert.worst_margin = std::min(cert.worst_margin, rec.worst_margin);
    cert.steps.push_back(rec);
  }
  return cert;
}

std::vector<Syllable> words(const Assembly& a, int max_len, int cap) {
  if (max_len > cap) {
    throw Error(ErrorKind::SearchSpaceTooLarge,
                "word length " + std::to_string(max_len) + " exceeds the cap " + std::to_string(cap));
  }
  std::vector<std::vector<Syllable>> pieces;
  int offset = 0;
  for (const FactorGroup& f : a.factors) {
    std::vector<Syllable> local = factor_elements(f, max_len);
    for (Syllable& s : local) {
      for (int& letter : s.word) letter += letter > 0 ? offset : -offset;
    }
    pieces.push_back(std::move(local));
    offset += static_cast<int>(f.maps.size());
  }
  return free_product_words(pieces, max_len);
}

std::vector<long long> word_count(const Assembly& a, int max_len) {
  std::vector<std::vector<long long>> pieces;
  for (const FactorGroup& f : a.factors) pieces.push_back(factor_growth(f.spec, max_len));
  return free_product_growth(pieces, max_len);
}

double min_pairwise_distance(const std::vector<Syllable>& elements) {
  // |a| is a lower bound for the ± distance, so a sorted sweep can stop early
  std::vector<std::pair<double, const Mobius*>> keyed;
  keyed.reserve(elements.size());
  for (const Syllable& s : elements) keyed.emplace_back(std::abs(s.map.a()), &s.map);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  double best = kInf;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    for (std::size_t j = i + 1; j < keyed.size() && keyed[j].first - keyed[i].first < best; ++j) {
      best = std::min(best, matrix_distance(*keyed[i].second, *keyed[j].second));
    }
  }
  return best;
}

ParabolicAudit audit_no_parabolic(const Assembly& a, int max_len, double eps) {
  std::vector<cplx> torsion_traces;
  for (const FactorGroup& f : a.factors) {
    for (const TorsionElement& t : f.torsion) {
      if (!t.map.reversing()) torsion_traces.push_back(t.map.trace_squared());
    }
  }
  ParabolicAudit report;
  std::vector<Generator> names = a.presentation.generators;
  for (const Syllable& w : words(a, max_len)) {
    if (w.map.reversing()) continue;
    report.checked++;
    const cplx t2 = w.map.trace_squared();
    const bool torsion = std::any_of(torsion_traces.begin(), torsion_traces.end(),
                                     [&](cplx x) { return std::abs(x - t2) <= eps; });
    if (torsion) {
      report.torsion_like++;
      continue;
    }
    if (std::abs(t2 - 4.0) <= eps) {
      throw Error(ErrorKind::ParabolicSuspect, word_to_string(w.word, names));
    }
    report.loxodromic++;
  }
  return report;
}

std::vector<ComplexPoint> limit_points(const Assembly& a, int depth) {
  std::vector<ComplexPoint> out;
  auto add = [&](const ComplexPoint& p) {
    for (const ComplexPoint& q : out) {
      if (chordal_distance(p, q) < 1e-9) return;
    }
    out.push_back(p);
  };
  for (const Syllable& w : words(a, depth)) {
    const Mobius g = w.map.reversing() ? w.map * w.map : w.map;
    // rounding in the trace grows like |w|², e.g. for conjugates of reflections
    const double norm = w.map.norm();
    const double tol = 1e-12 * std::max(1.0, norm * norm);
    const cplx tr = g.trace();
    const bool elliptic_or_parabolic = std::abs(tr.imag()) <= tol && std::abs(tr.real()) <= 2.0 + tol;
    if (elliptic_or_parabolic) continue;
    for (const ComplexPoint& p : fixed_points(g).points) {
      const bool attracting = p.is_infinite() ? std::abs(g.a()) > std::abs(g.d())
                                              : std::abs(g.c() * p.value() + g.d()) > 1.0;
      if (attracting) add(p);
    }
  }
  return out;
}

double assembly_envelope_distance(const Assembly& a, const ComplexPoint& z) {
  double out = kInf;
  for (const FactorGroup& f : a.factors) out = std::min(out, envelope_distance(f.core, z));
  return out;
}

OrbifoldSignature quotient_orbifold_signature(const ConformalSignature& sig) {
  require_admissible(sig);
  OrbifoldSignature out;
  out.genus = sig.gamma();
  for (int k : canonical(sig).elliptic) {
    out.cones.push_back(k);
    out.cones.push_back(k);
  }
  return out;
}

std::string to_string(const OrbifoldSignature& sig) {
  std::string out = "(" + std::to_string(sig.genus) + ";";
  if (!sig.orientable) out += sig.cones.empty() ? " -" : " -,";
  for (std::size_t i = 0; i < sig.cones.size(); ++i) {
    out += (i ? "," : " ") + std::to_string(sig.cones[i]);
  }
  return out + ")";
}

int write_limit_csv(std::ostream& out, const std::vector<ComplexPoint>& points) {
  out.precision(17);
  out << "re,im\n";
  int skipped = 0;
  for (const ComplexPoint& p : points) {
    if (p.is_infinite()) {
      ++skipped;
      continue;
    }
    out << p.value().real() << ',' << p.value().imag() << '\n';
  }
  return skipped;
}

void write_outline_csv(std::ostream& out, const Assembly& a, int samples_per_arc) {
  out.precision(17);
  out << "curve_id,re,im\n";
  int id = 0;
  auto emit = [&](const std::vector<ComplexPoint>& pts) {
    for (const ComplexPoint& p : pts) {
      if (p.is_finite()) out << id << ',' << p.value().real() << ',' << p.value().imag() << '\n';
    }
    ++id;
  };
  for (const FactorGroup& f : a.factors) {
    for (const Region& r : f.core) emit(r.boundary_samples(samples_per_arc));
  }
  for (const Circle& c : a.separators) emit(c.samples(samples_per_arc));
}

}  // namespace zns
