#include "tdual/io.hpp"

#include <fstream>
#include <sstream>

namespace tdual::io {

namespace {

Int int_from_json(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Int(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    Int x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw UsageError("field " + field + ": expected an integer, got " + j.dump());
}

Rat rat_from_json(const Json& j, const std::string& field) {
  if (j.is_array() && j.size() == 2) {
    Int num = int_from_json(j[0], field), den = int_from_json(j[1], field);
    if (den == 0) throw UsageError("field " + field + ": zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  if (j.is_string()) {
    Rat r;
    if (r.set_str(j.get<std::string>(), 10) == 0 && r.get_den() != 0) {
      r.canonicalize();
      return r;
    }
  }
  if (j.is_number_integer()) return Rat(int_from_json(j, field));
  throw UsageError("field " + field + ": expected [num, den], got " + j.dump());
}

template <class T, class F>
Matrix<T> matrix_from_json(const Json& j, const std::string& field, std::size_t cols_if_empty, F entry) {
  if (!j.is_array()) throw UsageError("field " + field + ": expected an array of rows");
  std::vector<std::vector<T>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array()) throw UsageError("field " + field + "[" + std::to_string(r) + "]: expected an array");
    std::vector<T> row;
    for (std::size_t c = 0; c < j[r].size(); ++c)
      row.push_back(entry(j[r][c], field + "[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    if (!rows.empty() && row.size() != rows.front().size())
      throw UsageError("field " + field + "[" + std::to_string(r) + "]: ragged row");
    rows.push_back(row);
  }
  return Matrix<T>::from_rows(rows, cols_if_empty);
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw UsageError("expected a JSON object");
  if (!j.contains(key)) throw UsageError(std::string("missing field ") + key);
  return j.at(key);
}

}  // namespace

Json to_json(const Int& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const IntMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

Json to_json(const Rat& x) { return Json::array({to_json(Int(x.get_num())), to_json(Int(x.get_den()))}); }

Json to_json(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    a.push_back(row);
  }
  return a;
}

Json root_datum_to_json(const RootDatum& rd) {
  Json j;
  j["rank"] = rd.rank;
  j["simple_roots"] = to_json(rd.simple_roots);
  j["simple_coroots"] = to_json(rd.simple_coroots);
  j["name"] = rd.name;
  return j;
}

RootDatum root_datum_from_json(const Json& j) {
  RootDatum rd;
  const Json& rank = require(j, "rank");
  if (!rank.is_number_unsigned() && !(rank.is_number_integer() && rank.get<long long>() >= 0))
    throw UsageError("field rank: expected a nonnegative integer");
  rd.rank = rank.get<std::size_t>();
  auto entry = [](const Json& e, const std::string& f) { return int_from_json(e, f); };
  rd.simple_roots = matrix_from_json<Int>(require(j, "simple_roots"), "simple_roots", rd.rank, entry);
  rd.simple_coroots = matrix_from_json<Int>(require(j, "simple_coroots"), "simple_coroots", rd.rank, entry);
  if (rd.simple_roots.cols() != rd.rank) throw UsageError("field simple_roots: rows must have length rank");
  if (rd.simple_coroots.cols() != rd.rank) throw UsageError("field simple_coroots: rows must have length rank");
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw UsageError("field name: expected a string");
    rd.name = j["name"].get<std::string>();
  }
  validate(rd);
  return rd;
}

Json qform_to_json(const QForm& q, bool embed_datum) {
  Json j;
  if (embed_datum) j["root_datum"] = root_datum_to_json(q.datum());
  j["gram_rational"] = to_json(q.gram_rational());
  j["gram_transcendental"] = to_json(q.gram_transcendental());
  return j;
}

QForm qform_from_json(const Json& j, const RootDatum* fallback, const std::filesystem::path& base_dir) {
  RootDatum rd;
  if (j.is_object() && j.contains("root_datum")) {
    const Json& ref = j["root_datum"];
    if (ref.is_string()) {
      std::filesystem::path p = ref.get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      rd = load_root_datum(p);
    } else {
      rd = root_datum_from_json(ref);
    }
  } else if (fallback) {
    rd = *fallback;
  } else {
    throw UsageError("form file has no root_datum and none was given");
  }
  auto entry = [](const Json& e, const std::string& f) { return rat_from_json(e, f); };
  RatMatrix g0 = matrix_from_json<Rat>(require(j, "gram_rational"), "gram_rational", rd.rank, entry);
  RatMatrix g1;
  if (j.contains("gram_transcendental"))
    g1 = matrix_from_json<Rat>(j["gram_transcendental"], "gram_transcendental", rd.rank, entry);
  return qform_from_gram(rd, g0, g1);
}

Json twisted_dual_to_json(const TwistedDual& td) {
  Json j = root_datum_to_json(td.datum);
  j["weight_sublattice"] = to_json(td.weight_sublattice.basis());
  Json mult = Json::array();
  for (const auto& m : td.multipliers) mult.push_back(m ? to_json(*m) : Json("inf"));
  j["multipliers"] = mult;
  Json dropped = Json::array();
  for (std::size_t i : td.dropped) dropped.push_back(i + 1);
  j["dropped"] = dropped;
  return j;
}

Json parse(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(origin + ": " + e.what());
  }
}

Json load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path.string());
}

RootDatum load_root_datum(const std::filesystem::path& path) {
  try {
    return root_datum_from_json(load(path));
  } catch (const UsageError& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

QForm load_qform(const std::filesystem::path& path, const RootDatum* fallback) {
  try {
    return qform_from_json(load(path), fallback, path.parent_path());
  } catch (const UsageError& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

void save(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path.string());
  out << j.dump(2) << "\n";
}

}  // namespace tdual::io
