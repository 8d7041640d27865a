#include "hornlr/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace hornlr {

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw std::invalid_argument("matrix must be square");
    for (Eigen::Index c = 0; c < n; ++c) {
      const auto& e = row[static_cast<std::size_t>(c)];
      if (e.is_number()) {
        m(i, c) = Complex(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(i, c) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        throw std::invalid_argument("matrix entries must be numbers or [re, im] pairs");
      }
    }
  }
  return m;
}

Json to_json(const DominantWeight& w) { return Json(w.parts()); }

Json to_json(const SpectralTriple& t) {
  return Json{{"mu", to_json(t.mu)}, {"nu", to_json(t.nu)}, {"lambda", to_json(t.lambda)}};
}

Json to_json(const LRResult& r) {
  return Json{{"triple", to_json(r.triple)},
              {"method", to_string(r.method)},
              {"coefficient", r.coefficient.convert_to<std::int64_t>()}};
}

Json to_json(const RealizationResult& r) {
  return Json{{"A", to_json(r.A.matrix())},
              {"B", to_json(r.B.matrix())},
              {"residual", r.residual},
              {"iterations", r.iterations},
              {"seed", r.seed},
              {"restart", r.restart},
              {"converged", r.converged}};
}

Json to_json(const MeasurementDistribution& dist, const NormalizedSpectrum& spectrum) {
  Json outcomes = Json::array();
  for (const auto& o : dist.outcomes)
    outcomes.push_back({{"frame", to_json(o.frame)}, {"prob", o.prob}, {"bound", kw_bound(o.frame, spectrum, dist.d)}});
  return Json{{"k", dist.k}, {"d", dist.d}, {"outcomes", std::move(outcomes)}};
}

Json to_json(const ScanWitness& w) {
  return Json{{"n", w.n},
              {"k", w.k},
              {"triple", to_json(w.triple)},
              {"normalized",
               {{"mu", w.k > 0 ? Json(normalize(w.triple.mu).values()) : Json()},
                {"nu", w.n - w.k > 0 ? Json(normalize(w.triple.nu).values()) : Json()},
                {"lambda", Json(normalize(w.triple.lambda).values())}}},
              {"distances", {w.distances.mu, w.distances.nu, w.distances.lambda}},
              {"epsilon", w.epsilon},
              {"coefficient", w.coefficient}};
}

Json to_json(const Theorem1Sweep& s) {
  Json failures = Json::array();
  for (const auto& f : s.failures) failures.push_back({{"triple", to_json(f.triple)}, {"residual", f.residual}});
  return Json{{"max_boxes", s.max_boxes},
              {"d", s.d},
              {"tol", s.tol},
              {"triples", s.triples},
              {"successes", s.successes},
              {"success_rate", s.success_rate()},
              {"worst_residual", s.worst_residual},
              {"scaling_consistent", s.scaling_consistent},
              {"failures", std::move(failures)}};
}

Json scan_summary(const std::vector<ScanStep>& steps) {
  Json series = Json::array();
  std::int64_t found = 0;
  for (const auto& s : steps) {
    Json row{{"n", s.n}, {"epsilon", s.epsilon}, {"candidates", s.candidates}};
    if (s.witness) {
      ++found;
      row["distances"] = {s.witness->distances.mu, s.witness->distances.nu, s.witness->distances.lambda};
      row["median"] = s.witness->distances.median();
    } else {
      row["distances"] = nullptr;
      row["note"] = s.note;
    }
    series.push_back(std::move(row));
  }
  return Json{{"summary", {{"scales", steps.size()}, {"witnesses", found}, {"series", std::move(series)}}}};
}

std::string scan_csv(const std::vector<ScanStep>& steps) {
  std::ostringstream out;
  out.precision(17);
  out << "n,k,eps,d_mu,d_nu,d_lambda,median,coefficient\n";
  for (const auto& s : steps) {
    out << s.n << ',';
    if (s.witness) {
      const auto& w = *s.witness;
      out << w.k << ',' << s.epsilon << ',' << w.distances.mu << ',' << w.distances.nu << ',' << w.distances.lambda
          << ',' << w.distances.median() << ',' << w.coefficient << '\n';
    } else {
      out << ',' << s.epsilon << ",,,,,\n";
    }
  }
  return out.str();
}

}  // namespace hornlr
