#pragma once

#include <map>
#include <string>
#include <vector>

#include "spinrep/mass_model.hpp"

namespace spinrep {

// Mass table rows: name,Q,Y,I2,U2,B,spin2,parity,mass_mev
// (I2, U2, spin2 are doubled half-integers; parity is the sign of P^2).
std::vector<Observation> parse_mass_csv(const std::string& path);

// Just (name, mass) pairs, for overriding catalog masses.
std::vector<std::pair<std::string, double>> mass_overrides_from_csv(const std::string& path);

// Plain key=value configuration; '#' starts a comment line.
std::map<std::string, std::string> parse_config(const std::string& path);

}  // namespace spinrep
