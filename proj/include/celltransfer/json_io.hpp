#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "celltransfer/genfunc.hpp"
#include "celltransfer/shapes.hpp"
#include "celltransfer/transfer.hpp"

namespace celltransfer::json {

using Json = nlohmann::json;

Json to_json(const Poset& p);
Poset poset_from_json(const Json& j);

Json members_to_json(ElementSet s);
ElementSet members_from_json(const Json& j, int n);

Json to_json(const StepFunction& f);
StepFunction step_from_json(const Json& j);

Json to_json(const TLabelledPoset& lp);
TLabelledPoset labelled_from_json(const Json& j);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j, int n);

Json to_json(const ExponentPolynomial& p);
ExponentPolynomial polynomial_from_json(const Json& j);

Json to_json(const BasisExpansion& e);
BasisExpansion expansion_from_json(const Json& j);

Json to_json(const SkewShape& s);
SkewShape skew_from_json(const Json& j);

Json to_json(const CylindricShape& c);
CylindricShape cylindric_from_json(const Json& j);

Json to_json(const DifferenceReport& r);

/// Input of the `transfer` command.
///
/// Generic form: {"labelled", "q", "r", "omega", "sigma"} with subposets as
/// {"members"} and tableaux as {"values"}. Shape form: {"q_shape", "r_shape",
/// "omega_rows", "sigma_rows"} where the rows list the entries of each row of
/// the skew shape left to right; the ambient poset is the smallest grid
/// holding both shapes.
struct TransferBundle {
  TLabelledPoset labelled;
  ConvexSubposet q, r;
  Tableau omega, sigma;
  std::optional<GridPoset> grid;  // set for the shape form
};

TransferBundle bundle_from_json(const Json& j);

Json transfer_report(const TransferContext& ctx, const TransferResult& res, const TransferSets& sets);

/// Canonical text: sorted keys, no insignificant whitespace.
std::string dump(const Json& j);

}  // namespace celltransfer::json
