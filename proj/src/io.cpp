#include "spinrep/io.hpp"

#include <fstream>
#include <sstream>

namespace spinrep {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) out.push_back(trim(cell));
    return out;
}

}  // namespace

std::vector<Observation> parse_mass_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open mass table: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty mass table: " + path);

    auto header = split_csv_line(line);
    const std::vector<std::string> expected = {"name", "Q", "Y", "I2", "U2", "B", "spin2", "parity", "mass_mev"};
    if (header != expected)
        throw std::runtime_error("mass table header must be name,Q,Y,I2,U2,B,spin2,parity,mass_mev");

    std::vector<Observation> out;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != expected.size())
            throw std::runtime_error("mass table line " + std::to_string(lineno) + ": bad column count");
        Observation obs;
        obs.name = cells[0];
        obs.qn.charge = std::stoi(cells[1]);
        obs.qn.hypercharge = std::stoi(cells[2]);
        obs.qn.isospin = HalfInt(std::stoll(cells[3]));
        obs.qn.uspin = HalfInt(std::stoll(cells[4]));
        obs.qn.baryon = std::stoi(cells[5]);
        obs.qn.spin = HalfInt(std::stoll(cells[6]));
        obs.qn.parity2 = std::stoi(cells[7]);
        obs.mass = std::stod(cells[8]);
        if (obs.qn.isospin.twice < 0 || obs.qn.uspin.twice < 0)
            throw std::runtime_error("mass table line " + std::to_string(lineno) + ": negative I or U");
        out.push_back(std::move(obs));
    }
    return out;
}

std::vector<std::pair<std::string, double>> mass_overrides_from_csv(const std::string& path) {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& obs : parse_mass_csv(path)) out.emplace_back(obs.name, obs.mass);
    return out;
}

std::map<std::string, std::string> parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config: " + path);
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        size_t eq = t.find('=');
        if (eq == std::string::npos) throw std::runtime_error("config line without '=': " + t);
        out[trim(t.substr(0, eq))] = trim(t.substr(eq + 1));
    }
    return out;
}

}  // namespace spinrep
