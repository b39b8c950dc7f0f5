#pragma once

#include "json.hpp"

#include "dioph/asymptotics.hpp"
#include "dioph/classify.hpp"
#include "dioph/counting.hpp"
#include "dioph/families.hpp"
#include "dioph/transforms.hpp"

namespace dioph {

// ordered_json keeps insertion order, so identical inputs serialize to
// identical bytes.
using json = nlohmann::ordered_json;

json surd_to_json(const SurdEntry& e);
SurdEntry surd_from_json(const json& j);

// {size, entries: [[{r, s, rad}]], translation: ["p/q", ...]}
json matrix_to_json(const TransformMatrix& m);
TransformMatrix matrix_from_json(const json& j);

json int_matrix_to_json(const IntMatrix& m);

json count_to_json(const Polynomial& p, const CountResult& r, bool include_elapsed = false);

json prediction_to_json(const ExponentPrediction& pred);
json fit_points_to_json(const std::vector<FitPoint>& points);

// {equation, class, predicted, method, points, alpha, verdict, ...}
json bound_report_to_json(const Polynomial& p, const EquationClass& cls, const BoundCheck& chk);

json homothety_to_json(const HomothetyCase& hc);
json diagonalization_to_json(const BinaryDiagonalization& d);
json preservation_to_json(const PreservationReport& rep);

// substitution certificate: the image polynomial together with the matrix
// that produced it
json transformed_to_json(const Polynomial& input, const IntAffine& t,
                         const TransformedEquation& te);

json witnesses_to_json(const ScaledWitnesses& w);

}  // namespace dioph
