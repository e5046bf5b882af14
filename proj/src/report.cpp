#include "supercong/report.hpp"

#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace supercong {

namespace {

using json = nlohmann::ordered_json;

const std::string kAtLeast = "≥";
const std::string kInfinite = "∞";

json valuation_json(const Valuation& v) {
  switch (v.kind) {
    case Valuation::Kind::Finite: return v.value;
    case Valuation::Kind::AtLeast: return kAtLeast + std::to_string(v.value);
    case Valuation::Kind::Infinite: break;
  }
  return kInfinite;
}

Valuation valuation_from_json(const json& j) {
  if (j.is_number_integer()) return Valuation::finite(j.get<int>());
  const auto s = j.get<std::string>();
  if (s == kInfinite) return Valuation::infinite();
  if (s.rfind(kAtLeast, 0) == 0) return Valuation::at_least(std::stoi(s.substr(kAtLeast.size())));
  throw std::invalid_argument("bad valuation field: " + s);
}

json opt_json(const std::optional<long>& v) { return v ? json(*v) : json(nullptr); }

std::optional<long> opt_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<long>();
}

}  // namespace

std::string to_json_line(const CongruenceRecord& rec) {
  json j;
  j["statement"] = statement_name(rec.statement);
  j["p"] = opt_json(rec.params.p);
  j["m"] = opt_json(rec.params.m);
  j["q"] = opt_json(rec.params.q);
  j["n"] = opt_json(rec.params.n);
  j["k"] = opt_json(rec.params.k);
  j["modulus_exp"] = rec.modulus_exp;
  j["residue"] = rec.residue;
  j["valuation"] = valuation_json(rec.observed);
  j["required"] = valuation_json(rec.required);
  j["pass"] = rec.asserted ? json(rec.pass) : json(nullptr);
  j["micros"] = rec.micros ? json(*rec.micros) : json(nullptr);
  return j.dump();
}

CongruenceRecord parse_json_line(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
    CongruenceRecord rec;
    const auto name = j.at("statement").get<std::string>();
    const auto id = parse_statement(name);
    if (!id) throw std::invalid_argument("unknown statement " + name);
    rec.statement = *id;
    rec.params = {opt_from_json(j.at("p")), opt_from_json(j.at("m")), opt_from_json(j.at("q")),
                  opt_from_json(j.at("n")), opt_from_json(j.at("k"))};
    rec.modulus_exp = j.at("modulus_exp").get<unsigned>();
    rec.residue = j.at("residue").get<std::string>();
    rec.observed = valuation_from_json(j.at("valuation"));
    rec.required = valuation_from_json(j.at("required"));
    rec.asserted = !j.at("pass").is_null();
    rec.pass = rec.asserted && j.at("pass").get<bool>();
    if (!j.at("micros").is_null()) rec.micros = j.at("micros").get<std::int64_t>();
    return rec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report line: ") + e.what());
  }
}

void write_report(std::span<const CongruenceRecord> records, std::ostream& out, bool timing) {
  for (CongruenceRecord rec : records) {
    if (!timing) rec.micros.reset();
    out << to_json_line(rec) << '\n';
  }
}

void write_csv(std::span<const CongruenceRecord> records, std::ostream& out, bool timing) {
  auto cell = [](const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); };
  out << "statement,p,m,q,n,k,modulus_exp,residue,valuation,required,pass,micros\n";
  for (const auto& rec : records) {
    out << statement_name(rec.statement) << ',' << cell(rec.params.p) << ',' << cell(rec.params.m)
        << ',' << cell(rec.params.q) << ',' << cell(rec.params.n) << ',' << cell(rec.params.k)
        << ',' << rec.modulus_exp << ',' << rec.residue << ',' << rec.observed.to_string() << ','
        << rec.required.to_string() << ',' << (rec.asserted ? (rec.pass ? "true" : "false") : "")
        << ',' << (timing && rec.micros ? std::to_string(*rec.micros) : std::string()) << '\n';
  }
}

}  // namespace supercong
