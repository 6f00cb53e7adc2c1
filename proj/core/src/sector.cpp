#include "hopf/topology.hpp"

#include "json.hpp"

#include <stdexcept>

namespace hopf {

std::string ChargeReport::to_json() const {
  nlohmann::json j;
  j["cs"] = cs;
  j["whitehead"] = whitehead ? nlohmann::json(*whitehead) : nlohmann::json(nullptr);
  j["linking"] = linking ? nlohmann::json(*linking) : nlohmann::json(nullptr);
  j["rounded"] = rounded;
  j["deviation"] = deviation;
  return j.dump();
}

SectorLabel assign_sector(const MapField& psi, const MapField& phi, const LiftField& u,
                          const std::string& reference_id) {
  const MapField factored = act(u, phi);
  const double residual = max_abs_diff(factored.values, psi.values);
  if (residual > 1e-10)
    throw std::invalid_argument("assign_sector: psi is not act(u, phi) (residual " +
                                std::to_string(residual) + ")");
  const ChargeReport charge = chern_simons_charge(pure_gauge_potential(u), &phi);
  SectorLabel label;
  label.reference_id = reference_id;
  label.charge = charge.rounded;
  label.modulus_note =
      "charge is a raw integer; equality modulo the subgroup fixed by the reference map is not "
      "decided";
  return label;
}

}  // namespace hopf
