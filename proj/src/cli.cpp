#include "gkz/cli.hpp"

#include "gkz/cone.hpp"
#include "gkz/errors.hpp"
#include "gkz/hypergeo.hpp"
#include "gkz/poly.hpp"
#include "gkz/toric.hpp"
#include "gkz/transversal.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <limits>
#include <sstream>
#include <thread>
#include <variant>

namespace gkz::cli {

using json = nlohmann::ordered_json;

namespace {

// ------------------------------------------------------------ positions

struct Position {
  std::size_t line = 1;
  std::size_t column = 1;
};

Position position_at(std::string_view text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

[[noreturn]] void fail_at(std::string_view text, std::size_t offset, const std::string& what) {
  const Position p = position_at(text, offset);
  throw ParseError(what, p.line, p.column);
}

using PathStep = std::variant<std::string, std::size_t>;

// Walks already validated JSON text to the value addressed by path and
// returns its byte offset. Only used to place error messages.
class JsonLocator {
 public:
  explicit JsonLocator(std::string_view text) : text_(text) {}

  std::size_t find(const std::vector<PathStep>& path) {
    i_ = 0;
    skip_ws();
    for (const auto& step : path) {
      const std::size_t here = i_;
      if (!descend(step)) return here;
    }
    return i_;
  }

 private:
  bool descend(const PathStep& step) {
    if (const auto* key = std::get_if<std::string>(&step)) {
      if (peek() != '{') return false;
      ++i_;
      for (;;) {
        skip_ws();
        if (peek() != '"') return false;
        const std::size_t start = i_ + 1;
        skip_string();
        const std::string_view name = text_.substr(start, i_ - 1 - start);
        skip_ws();
        if (peek() != ':') return false;
        ++i_;
        skip_ws();
        if (name == *key) return true;
        skip_value();
        skip_ws();
        if (peek() != ',') return false;
        ++i_;
      }
    }
    const std::size_t index = std::get<std::size_t>(step);
    if (peek() != '[') return false;
    ++i_;
    for (std::size_t k = 0;; ++k) {
      skip_ws();
      if (peek() == ']') return false;
      if (k == index) return true;
      skip_value();
      skip_ws();
      if (peek() != ',') return false;
      ++i_;
    }
  }

  char peek() const { return i_ < text_.size() ? text_[i_] : '\0'; }

  void skip_ws() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  void skip_string() {
    ++i_;
    while (i_ < text_.size() && text_[i_] != '"') i_ += text_[i_] == '\\' ? 2 : 1;
    ++i_;
  }

  void skip_value() {
    const char c = peek();
    if (c == '"') {
      skip_string();
      return;
    }
    if (c == '{' || c == '[') {
      int depth = 0;
      while (i_ < text_.size()) {
        const char d = text_[i_];
        if (d == '"') {
          skip_string();
          continue;
        }
        if (d == '{' || d == '[') ++depth;
        if (d == '}' || d == ']') --depth;
        ++i_;
        if (depth == 0) return;
      }
      return;
    }
    while (i_ < text_.size() && !std::strchr(",]} \t\r\n", text_[i_])) ++i_;
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

// -------------------------------------------------------- scalar parsing

bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

Integer integer_from_token(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s));
}

std::optional<Rational> rational_from_token(std::string_view s) {
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_token(s)) return std::nullopt;
    return Rational(integer_from_token(s));
  }
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = s.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den.front() == '-' || den.front() == '+')
    return std::nullopt;
  const Integer d = integer_from_token(den);
  if (d == 0) return std::nullopt;
  Rational r(integer_from_token(num), d);
  r.canonicalize();
  return r;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

// ------------------------------------------------------------- documents

using Locate = std::function<Position(const std::vector<PathStep>&)>;

[[noreturn]] void fail_path(const Locate& locate, const std::vector<PathStep>& path,
                            const std::string& what) {
  const Position p = locate(path);
  throw ParseError(what, p.line, p.column);
}

Integer integer_from_json(const json& v, const Locate& locate, const std::vector<PathStep>& path) {
  if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string() && is_integer_token(v.get<std::string>()))
    return integer_from_token(v.get<std::string>());
  if (v.is_number_float())
    fail_path(locate, path,
              "matrix entry is not an integer (entries beyond 64 bits must be quoted strings)");
  fail_path(locate, path, "matrix entry must be an integer");
}

MatrixInput input_from_document(const json& doc, const Locate& locate) {
  MatrixInput in;
  const json* matrix = &doc;
  if (doc.is_object()) {
    for (const auto& [key, value] : doc.items())
      if (key != "matrix" && key != "label" && key != "beta" && key != "seed")
        fail_path(locate, {key}, "unknown field '" + key + "'");
    if (!doc.contains("matrix")) fail_path(locate, {}, "missing field 'matrix'");
    matrix = &doc.at("matrix");
  } else if (!doc.is_array()) {
    fail_path(locate, {}, "expected a JSON object with a 'matrix' field");
  }

  std::vector<PathStep> base;
  if (doc.is_object()) base.push_back(std::string("matrix"));
  auto at = [&](std::initializer_list<PathStep> extra) {
    std::vector<PathStep> p = base;
    p.insert(p.end(), extra);
    return p;
  };

  if (!matrix->is_array() || matrix->empty())
    fail_path(locate, base, "'matrix' must be a nonempty array of rows");
  std::vector<std::vector<Integer>> rows;
  for (std::size_t i = 0; i < matrix->size(); ++i) {
    const json& row = (*matrix)[i];
    if (!row.is_array() || row.empty())
      fail_path(locate, at({i}), "matrix row " + std::to_string(i + 1) + " must be a nonempty array");
    if (!rows.empty() && row.size() != rows.front().size())
      fail_path(locate, at({i}),
                "ragged rows: row " + std::to_string(i + 1) + " has " + std::to_string(row.size()) +
                    " entries, expected " + std::to_string(rows.front().size()));
    std::vector<Integer> r;
    for (std::size_t j = 0; j < row.size(); ++j) r.push_back(integer_from_json(row[j], locate, at({i, j})));
    rows.push_back(std::move(r));
  }
  in.matrix = IntegerMatrix(rows);

  if (!doc.is_object()) return in;

  if (doc.contains("label") && !doc.at("label").is_null()) {
    if (!doc.at("label").is_string()) fail_path(locate, {"label"}, "'label' must be a string");
    in.label = doc.at("label").get<std::string>();
  }
  if (doc.contains("beta") && !doc.at("beta").is_null()) {
    const json& beta = doc.at("beta");
    if (!beta.is_array()) fail_path(locate, {"beta"}, "'beta' must be an array");
    RationalVector b;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      const json& v = beta[i];
      std::optional<Rational> r;
      if (v.is_number_unsigned()) r = Rational(Integer(std::to_string(v.get<std::uint64_t>())));
      else if (v.is_number_integer()) r = Rational(Integer(std::to_string(v.get<std::int64_t>())));
      else if (v.is_string()) r = rational_from_token(trim(v.get<std::string>()));
      if (!r)
        fail_path(locate, {std::string("beta"), i},
                  "beta entries must be integers or rational strings such as \"-3/2\"");
      b.push_back(*r);
    }
    if (b.size() != in.matrix.rows())
      fail_path(locate, {"beta"},
                "beta has " + std::to_string(b.size()) + " entries, expected d = " +
                    std::to_string(in.matrix.rows()));
    in.beta = std::move(b);
  }
  if (doc.contains("seed") && !doc.at("seed").is_null()) {
    const json& s = doc.at("seed");
    if (s.is_number_unsigned()) {
      in.seed = s.get<std::uint64_t>();
    } else if (s.is_string() && is_integer_token(s.get<std::string>()) &&
               s.get<std::string>().front() != '-') {
      const Integer v = integer_from_token(s.get<std::string>());
      if (v > Integer(std::to_string(std::numeric_limits<std::uint64_t>::max())))
        fail_path(locate, {"seed"}, "'seed' does not fit in 64 bits");
      in.seed = std::stoull(v.get_str());
    } else {
      fail_path(locate, {"seed"}, "'seed' must be a nonnegative integer");
    }
  }
  return in;
}

MatrixInput parse_json_input(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    const auto column = what.find("column");
    const auto colon = what.find(": ", column == std::string::npos ? 0 : column);
    if (colon != std::string::npos) what = what.substr(colon + 2);
    fail_at(text, e.byte == 0 ? 0 : e.byte - 1, "invalid JSON: " + what);
  }
  JsonLocator locator(text);
  return input_from_document(doc, [&](const std::vector<PathStep>& path) {
    return position_at(text, locator.find(path));
  });
}

MatrixInput parse_grid_input(std::string_view text) {
  std::vector<std::vector<Integer>> rows;
  std::size_t line_no = 0;
  std::size_t offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(offset, end - offset);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<Integer> row;
    std::size_t first_column = 0;
    std::size_t k = 0;
    while (k < line.size()) {
      const char c = line[k];
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        ++k;
        continue;
      }
      const std::size_t start = k;
      while (k < line.size() && line[k] != ',' && !std::isspace(static_cast<unsigned char>(line[k])))
        ++k;
      const std::string_view token = line.substr(start, k - start);
      if (!is_integer_token(token))
        throw ParseError("non-integer entry '" + std::string(token) + "'", line_no, start + 1);
      if (row.empty()) first_column = start + 1;
      row.push_back(integer_from_token(token));
    }
    if (!row.empty()) {
      if (!rows.empty() && row.size() != rows.front().size())
        throw ParseError("ragged rows: row " + std::to_string(rows.size() + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()),
                         line_no, first_column);
      rows.push_back(std::move(row));
    }
    offset = end + 1;
  }
  if (rows.empty()) throw ParseError("empty input: no matrix rows", 1, 1);
  MatrixInput in;
  in.matrix = IntegerMatrix(rows);
  return in;
}

// -------------------------------------------------------------- rendering

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json rational_json(const Rational& v) { return v.get_str(); }

json matrix_json(const IntegerMatrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(integer_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json rationals_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

json columns_json(const std::vector<std::size_t>& columns) {
  json out = json::array();
  for (auto j : columns) out.push_back(j + 1);
  return out;
}

std::string columns_text(const std::vector<std::size_t>& columns) {
  std::string s = "{";
  for (std::size_t k = 0; k < columns.size(); ++k) s += (k ? "," : "") + std::to_string(columns[k] + 1);
  return s + "}";
}

json polys_json(const std::vector<Polynomial>& polys, const std::vector<std::string>& names) {
  json out = json::array();
  for (const auto& p : polys) out.push_back(to_string(p, names));
  return out;
}

json optional_size(const std::optional<std::size_t>& v) {
  return v ? json(*v) : json(nullptr);
}

std::string path_name(CharacteristicPath p) {
  return p == CharacteristicPath::direct ? "direct" : "homogenized";
}

std::string plural(std::size_t k, const std::string& word) {
  return std::to_string(k) + " " + word + (k == 1 ? "" : "s");
}

// ------------------------------------------------------------------ checks

CheckResult make(std::string name, bool pass, std::string reason, json details) {
  return {std::move(name), pass ? Verdict::pass : Verdict::fail, std::move(reason),
          std::move(details)};
}

CheckResult skipped(std::string name, std::string reason) {
  return {std::move(name), Verdict::skipped, std::move(reason), json::object()};
}

CheckResult toric_check(const ToricData& t, const HomogeneityAudit& h,
                        const std::optional<std::size_t>& dim) {
  const std::size_t n = t.matrix.cols();
  const std::size_t r = rank(t.matrix);
  json kernel = json::array();
  for (const auto& v : t.kernel_basis) {
    json col = json::array();
    for (const auto& x : v) col.push_back(integer_json(x));
    kernel.push_back(std::move(col));
  }
  json d;
  d["n"] = n;
  d["rank"] = r;
  d["krull_dimension"] = optional_size(dim);
  d["kernel_basis"] = std::move(kernel);
  d["generators"] = polys_json(t.toric_gb, layout::xi_names(n));
  d["a_homogeneous"] = h.pass;
  d["homogeneity_detail"] = h.detail;
  const bool dim_ok = dim && *dim == r;
  std::string reason;
  if (!h.pass)
    reason = "a generator is not A-homogeneous: " + h.detail;
  else if (!dim_ok)
    reason = "dim k[u]/I_A = " + (dim ? std::to_string(*dim) : std::string("undefined")) +
             " but rank(A) = " + std::to_string(r);
  else
    reason = "dim k[u]/I_A = " + std::to_string(r) + " = rank(A); " +
             plural(t.toric_gb.size(), "generator") + ", all A-homogeneous";
  return make("toric-ideal", h.pass && dim_ok, reason, std::move(d));
}

CheckResult parameter_check(const ParameterVerdict& v) {
  json d;
  d["n"] = v.n;
  d["rank"] = v.rank;
  d["forms"] = v.forms;
  d["dim_before"] = v.dim_before;
  d["dim_after"] = v.dim_after;
  d["drop"] = v.drop;
  d["system_of_parameters"] =
      v.system_of_parameters ? json(*v.system_of_parameters) : json(nullptr);
  std::ostringstream r;
  r << "dim k[x,u]/(I_A + <Axu>) = " << v.dim_after << (v.dim_after == v.n ? " = " : " != ")
    << "n = " << v.n << "; drop " << v.dim_before << " -> " << v.dim_after << " is " << v.drop;
  if (v.system_of_parameters)
    r << (*v.system_of_parameters ? " = " : " != ") << "rank(A) = number of forms";
  else
    r << "; system-of-parameters clause skipped (rank(A) < d)";
  return make("parameter-theorem", v.pass, r.str(), std::move(d));
}

CheckResult characteristic_check(const CharacteristicModel& m) {
  const std::size_t n = m.matrix.cols();
  json d;
  d["n"] = n;
  d["graded"] = m.graded;
  d["path"] = path_name(m.path);
  d["routes_agree"] = m.routes_agree;
  d["dimension"] = m.dimension;
  d["initial_ideal"] = polys_json(m.initial_ideal.groebner_basis(), layout::xi_names(n));
  d["generators"] = polys_json(m.ideal.generators(), layout::phase_space_names(n));
  std::string reason;
  if (!m.routes_agree)
    reason = m.graded ? "direct and homogenized characteristic ideals differ"
                      : "in(I_A) by deformation differs from the homogenization route";
  else if (m.graded)
    reason = "A is standard graded, in(I_A) = I_A; the homogenized route gives the same reduced basis";
  else
    reason = "in(I_A) by Groebner deformation matches <I_Ahat, u0> contracted";
  reason += "; " + plural(m.ideal.generators().size(), "generator");
  return make("characteristic-ideal", m.routes_agree, reason, std::move(d));
}

CheckResult holonomicity_check(const HolonomicityVerdict& v) {
  json d;
  d["n"] = v.n;
  d["dimension"] = v.dimension;
  d["path"] = path_name(v.path);
  d["routes_agree"] = v.routes_agree;
  d["holonomic"] = v.holonomic;
  const bool pass = v.holonomic && v.dimension == v.n && v.routes_agree;
  std::string reason = "char dim = " + std::to_string(v.dimension) +
                       (v.dimension == v.n ? " = " : v.dimension < v.n ? " < " : " > ") + "n = " +
                       std::to_string(v.n) + " (" + path_name(v.path) + " path)";
  if (!v.routes_agree) reason += "; characteristic routes disagree";
  return make("holonomicity", pass, reason, std::move(d));
}

CheckResult homogenization_check(const HomogenizationVerdict& v, std::size_t n) {
  json d;
  d["hat"] = matrix_json(v.hat);
  d["trivially_consistent"] = v.trivially_consistent;
  d["left"] = polys_json(v.left, layout::xi_names(n));
  d["right"] = polys_json(v.right, layout::xi_names(n));
  d["consistent"] = v.consistent;
  d["extended_left_dim"] = optional_size(v.extended_left_dim);
  d["extended_right_dim"] = optional_size(v.extended_right_dim);
  d["extended_consistent"] = v.extended_consistent;
  std::string reason;
  if (v.trivially_consistent) {
    reason = "trivially consistent: A is standard graded";
  } else {
    reason = v.consistent ? "in(I_A) = <I_Ahat, u0> contracted (" + plural(v.left.size(), "reduced generator") + ")"
                          : "in(I_A) and <I_Ahat, u0> contracted differ";
    auto dim = [](const std::optional<std::size_t>& x) {
      return x ? std::to_string(*x) : std::string("undefined");
    };
    reason += "; extended dims " + dim(v.extended_left_dim) +
              (v.extended_consistent ? " = " : " != ") + dim(v.extended_right_dim);
  }
  return make("homogenization", v.consistent && v.extended_consistent, reason, std::move(d));
}

CheckResult family_result(const FamilyVerdict& v) {
  json d;
  d["parameter_free"] = v.parameter_free;
  d["requested"] = v.requested;
  d["resamples"] = v.resamples;
  json attempts = json::array();
  for (const auto& s : v.attempts) {
    json a;
    a["point"] = rationals_json(s.point);
    a["degree"] = optional_size(s.degree);
    attempts.push_back(std::move(a));
  }
  d["attempts"] = std::move(attempts);
  d["common_degree"] = optional_size(v.common_degree);
  d["note"] = "fiber degree of the commutative model at x = p; not the holonomic rank";

  std::string reason;
  if (!v.parameter_free) {
    reason = "a characteristic generator is neither in in(I_A) nor an Euler form";
  } else if (v.common_degree) {
    reason = "finite fiber at " + std::to_string(v.requested) + " of " +
             std::to_string(v.requested) + " sample points, common degree " +
             std::to_string(*v.common_degree);
    if (v.resamples) reason += " (" + plural(v.resamples, "resample") + ")";
  } else {
    if (!v.attempts.empty() && !v.attempts.back().degree) {
      reason = "infinite fiber persisted through " + plural(kMaxResamples, "resample") +
               "; a non-generic sample is possible, rerun with another --seed; a repeat "
               "indicates an engine bug";
    } else {
      reason = "fiber degrees disagree across sample points:";
      for (const auto& s : v.attempts)
        if (s.degree) reason += " " + std::to_string(*s.degree);
    }
  }
  return make("family", v.pass, reason, std::move(d));
}

CheckResult faces_check(const IntegerMatrix& a, const std::vector<Face>& faces) {
  json list = json::array();
  bool all_verified = true;
  bool orbit_ok = true;
  for (const auto& f : faces) {
    const bool verified = verify_certificate(a, f);
    all_verified = all_verified && verified;
    orbit_ok = orbit_ok && f.dim == orbit_dimension(a, f);
    json e;
    e["columns"] = columns_json(f.columns);
    json normal = json::array();
    for (const auto& c : f.normal) normal.push_back(rational_json(c));
    e["normal"] = std::move(normal);
    e["orbit_dimension"] = f.dim;
    e["certificate_verified"] = verified;
    list.push_back(std::move(e));
  }
  const bool top_ok = !faces.empty() && faces.back().columns.size() == a.cols() &&
                      faces.back().dim == rank(a);
  json d;
  d["count"] = faces.size();
  d["faces"] = std::move(list);
  std::string reason = plural(faces.size(), "face");
  reason += all_verified ? "; every supporting certificate verified" : "; a certificate failed";
  if (!top_ok) reason += "; dim X_A != rank(A)";
  return make("faces", all_verified && orbit_ok && top_ok, reason, std::move(d));
}

CheckResult face_audit_check(const std::vector<FaceAudit>& audits) {
  json list = json::array();
  std::size_t nonempty = 0;
  std::optional<std::string> first_failure;
  for (const auto& f : audits) {
    json e;
    e["columns"] = columns_json(f.face.columns);
    e["size"] = f.size;
    e["dimension"] = optional_size(f.dimension);
    e["pass"] = f.pass;
    list.push_back(std::move(e));
    if (f.size) ++nonempty;
    if (!f.pass && !first_failure)
      first_failure = "face " + columns_text(f.face.columns) + ": dim " +
                      (f.dimension ? std::to_string(*f.dimension) : std::string("undefined")) +
                      " != |tau| = " + std::to_string(f.size);
  }
  json d;
  d["faces"] = std::move(list);
  return make("face-audit", !first_failure,
              first_failure.value_or("dim k[x_tau,u_tau]/(I + <A_tau x u>) = |tau| on all " +
                                     plural(nonempty, "nonempty face")),
              std::move(d));
}

CheckResult transversality_check(const TransversalitySummary& s) {
  json list = json::array();
  std::size_t refused = 0;
  std::size_t nonempty = 0;
  for (const auto& f : s.faces) {
    json e;
    e["columns"] = columns_json(f.face.columns);
    e["instances"] = f.instances;
    e["passed"] = f.passed;
    e["boundary_refused"] = f.boundary_refused;
    list.push_back(std::move(e));
    refused += f.boundary_refused;
    nonempty += !f.face.columns.empty();
  }
  json d;
  d["instances"] = s.instances;
  d["passed"] = s.passed;
  d["faces"] = std::move(list);
  d["assumption"] = TransversalityCertificate{}.assumption;
  std::string reason = std::to_string(s.passed) + " of " + std::to_string(s.instances) +
                       " sampled instances certified on " + plural(nonempty, "nonempty face") +
                       "; zero-coordinate points refused on " + std::to_string(refused) + " of " +
                       plural(s.faces.size(), "face");
  return make("transversality", s.pass, reason, std::move(d));
}

bool needs_full_rank(Command c) {
  switch (c) {
    case Command::toric:
    case Command::faces:
    case Command::transversality:
      return false;
    default:
      return true;
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

// ------------------------------------------------------------------ input

MatrixInput parse_input(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{' || c == '[') return parse_json_input(text);
    break;
  }
  return parse_grid_input(text);
}

std::string render_input(const MatrixInput& input) {
  json doc;
  doc["matrix"] = matrix_json(input.matrix);
  if (input.label) doc["label"] = *input.label;
  if (input.beta) doc["beta"] = rationals_json(*input.beta);
  if (input.seed) doc["seed"] = *input.seed;
  return doc.dump();
}

RationalVector parse_rational_list(std::string_view text) {
  RationalVector out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    const std::string token = trim(text.substr(start, end - start));
    const auto r = rational_from_token(token);
    if (!r) throw ParseError("not a rational number: '" + token + "'", 1, start + 1);
    out.push_back(*r);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// ----------------------------------------------------------------- report

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::skipped:
      return "skipped";
  }
  return "skipped";
}

Verdict verdict_from_string(std::string_view s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "skipped") return Verdict::skipped;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

int ReportDocument::exit_code() const {
  if (error) return 2;
  for (const auto& c : checks)
    if (c.verdict == Verdict::fail) return 1;
  return 0;
}

std::string ReportDocument::status() const {
  switch (exit_code()) {
    case 0:
      return "pass";
    case 1:
      return "fail";
    default:
      return "invalid";
  }
}

json to_json(const ReportDocument& r) {
  json j;
  j["engine"] = {{"name", kEngineName}, {"version", r.engine_version}};
  j["command"] = r.command;
  if (!r.source.empty()) j["source"] = r.source;
  j["input"] = r.input ? json::parse(render_input(*r.input)) : json(nullptr);
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  j["status"] = r.status();
  j["exit_code"] = r.exit_code();
  if (r.error)
    j["error"] = {{"hypothesis", r.error->hypothesis}, {"message", r.error->message}};
  else
    j["error"] = nullptr;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e;
    e["name"] = c.name;
    e["verdict"] = to_string(c.verdict);
    e["reason"] = c.reason;
    e["details"] = c.details;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  json timings = json::object();
  for (const auto& [k, v] : r.timings_ms) timings[k] = v;
  j["timings_ms"] = std::move(timings);
  return j;
}

ReportDocument report_from_json(const json& j) {
  ReportDocument r;
  r.engine_version = j.at("engine").at("version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.source = j.value("source", std::string());
  if (!j.at("input").is_null())
    r.input = input_from_document(j.at("input"), [](const std::vector<PathStep>&) {
      return Position{};
    });
  r.seed = j.at("seed").get<std::uint64_t>();
  r.samples = j.at("samples").get<std::size_t>();
  if (!j.at("error").is_null())
    r.error = InputError{j.at("error").at("hypothesis").get<std::string>(),
                         j.at("error").at("message").get<std::string>()};
  for (const auto& e : j.at("checks")) {
    CheckResult c;
    c.name = e.at("name").get<std::string>();
    c.verdict = verdict_from_string(e.at("verdict").get<std::string>());
    c.reason = e.at("reason").get<std::string>();
    c.details = e.at("details");
    r.checks.push_back(std::move(c));
  }
  if (j.contains("timings_ms"))
    for (const auto& [k, v] : j.at("timings_ms").items()) r.timings_ms[k] = v.get<double>();
  return r;
}

std::string render_json(const ReportDocument& report, bool include_timings) {
  json j = to_json(report);
  if (!include_timings) j.erase("timings_ms");
  return j.dump(2) + "\n";
}

std::string render_text(const ReportDocument& r) {
  std::ostringstream out;
  out << kEngineName << " " << r.engine_version << "  command: " << r.command
      << "  seed: " << r.seed << "  samples: " << r.samples << "\n";
  if (!r.source.empty()) out << "source: " << r.source << "\n";
  if (r.input) {
    const IntegerMatrix& a = r.input->matrix;
    out << "matrix: " << to_string(a) << "  (d = " << a.rows() << ", n = " << a.cols() << ")";
    if (r.input->label) out << "  label: " << *r.input->label;
    if (r.input->beta) {
      out << "  beta: (";
      for (std::size_t i = 0; i < r.input->beta->size(); ++i)
        out << (i ? ", " : "") << (*r.input->beta)[i].get_str();
      out << ")";
    }
    out << "\n";
  }
  if (r.error) {
    out << "invalid input";
    if (!r.error->hypothesis.empty()) out << " (hypothesis violated: " << r.error->hypothesis << ")";
    out << ": " << r.error->message << "\n";
  }
  for (const auto& c : r.checks) {
    std::string tag = to_string(c.verdict);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    out << "  " << std::left << std::setw(8) << tag << std::setw(22) << c.name << c.reason << "\n";
    auto list = [&](const char* key, const char* heading) {
      if (!c.details.contains(key) || !c.details.at(key).is_array()) return;
      const json& items = c.details.at(key);
      if (items.empty()) return;
      out << "            " << heading << ":\n";
      const std::size_t shown = std::min<std::size_t>(items.size(), 12);
      for (std::size_t k = 0; k < shown; ++k)
        out << "              " << items[k].get<std::string>() << "\n";
      if (shown < items.size()) out << "              ... " << items.size() - shown << " more\n";
    };
    if (c.name == "toric-ideal") list("generators", "I_A");
    if (c.name == "characteristic-ideal") list("generators", "generators");
    if (c.name == "homogenization" && !c.details.value("trivially_consistent", true))
      list("left", "in(I_A)");
    if (c.name == "faces")
      for (const auto& f : c.details.at("faces")) {
        std::vector<std::size_t> cols;
        for (const auto& x : f.at("columns")) cols.push_back(x.get<std::size_t>() - 1);
        std::string normal;
        for (const auto& x : f.at("normal")) normal += (normal.empty() ? "" : ",") + x.get<std::string>();
        out << "            " << std::setw(14) << columns_text(cols) << " normal (" << normal
            << ")  dim Orb = " << f.at("orbit_dimension").get<std::size_t>() << "\n";
      }
  }
  out << "status: " << r.status() << " (exit " << r.exit_code() << ")\n";
  if (r.exit_code() == 1)
    out << "theorem-verdict failure on valid input: this should never happen and indicates an "
           "engine bug\n";
  return out.str();
}

// --------------------------------------------------------------- commands

std::optional<Command> parse_command(std::string_view name) {
  static const std::map<std::string_view, Command> table = {
      {"toric", Command::toric},
      {"faces", Command::faces},
      {"char-ideal", Command::char_ideal},
      {"dim", Command::dim},
      {"check", Command::check},
      {"homogenize", Command::homogenize},
      {"fibers", Command::fibers},
      {"transversality", Command::transversality}};
  const auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::toric:
      return "toric";
    case Command::faces:
      return "faces";
    case Command::char_ideal:
      return "char-ideal";
    case Command::dim:
      return "dim";
    case Command::check:
      return "check";
    case Command::homogenize:
      return "homogenize";
    case Command::fibers:
      return "fibers";
    case Command::transversality:
      return "transversality";
  }
  return "check";
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"toric",      "faces",  "char-ideal",
                                                 "dim",        "check",  "homogenize",
                                                 "fibers",     "transversality"};
  return names;
}

ReportDocument run(Command command, const MatrixInput& input, const RunOptions& options) {
  using clock = std::chrono::steady_clock;
  ReportDocument r;
  r.command = command_name(command);
  r.input = input;
  if (options.beta) r.input->beta = options.beta;
  r.seed = options.seed.value_or(input.seed.value_or(0));
  r.samples = options.samples;
  const IntegerMatrix& a = input.matrix;
  const std::size_t n = a.cols();

  auto timed = [&](const std::string& stage, auto&& body) {
    const auto start = clock::now();
    body();
    r.timings_ms[stage] = std::chrono::duration<double, std::milli>(clock::now() - start).count();
  };

  try {
    if (r.input->beta && r.input->beta->size() != a.rows())
      throw InvalidMatrix("beta has d entries",
                          "beta has " + std::to_string(r.input->beta->size()) +
                              " entries but A has d = " + std::to_string(a.rows()) + " rows");
    require_nonzero_columns(a);
    if (needs_full_rank(command)) require_full_row_rank(a);

    switch (command) {
      case Command::toric:
        timed("toric", [&] {
          const ToricData t = toric_ideal(a);
          r.checks.push_back(toric_check(t, a_homogeneity_audit(t), krull_dimension(t.ideal())));
        });
        break;
      case Command::faces:
        timed("faces", [&] { r.checks.push_back(faces_check(a, enumerate_faces(a))); });
        timed("face-audit", [&] { r.checks.push_back(face_audit_check(face_dimension_audit(a))); });
        break;
      case Command::char_ideal:
        timed("characteristic", [&] { r.checks.push_back(characteristic_check(characteristic_ideal(a))); });
        break;
      case Command::dim:
        timed("parameter", [&] { r.checks.push_back(parameter_check(verify_parameter_theorem(a))); });
        timed("holonomicity", [&] { r.checks.push_back(holonomicity_check(verify_holonomicity(a))); });
        break;
      case Command::homogenize:
        timed("homogenization",
              [&] { r.checks.push_back(homogenization_check(homogenization_reduction(a), n)); });
        break;
      case Command::fibers:
        if (options.samples == 0) {
          r.checks.push_back(skipped("family", "no sample points requested (--samples 0)"));
          break;
        }
        timed("family", [&] { r.checks.push_back(family_result(family_check(a, r.samples, r.seed))); });
        break;
      case Command::transversality:
        if (options.samples == 0) {
          r.checks.push_back(skipped("transversality", "no instances requested (--samples 0)"));
          break;
        }
        timed("transversality", [&] {
          r.checks.push_back(transversality_check(transversality_sampling(a, r.samples, r.seed)));
        });
        break;
      case Command::check: {
        // verify() needs at least one sample; the sampled checks are dropped afterwards.
        const VerificationReport v = verify(a, {std::max<std::size_t>(r.samples, 1), r.seed});
        r.timings_ms = v.timings_ms;
        r.checks.push_back(toric_check(v.toric, v.homogeneity, v.toric_dimension));
        r.checks.push_back(parameter_check(v.parameter));
        r.checks.push_back(characteristic_check(v.characteristic));
        r.checks.push_back(holonomicity_check(v.holonomicity));
        r.checks.push_back(homogenization_check(v.homogenization, n));
        if (r.samples == 0) {
          r.checks.push_back(skipped("family", "no sample points requested (--samples 0)"));
        } else {
          r.checks.push_back(family_result(v.family));
        }
        std::vector<Face> faces;
        for (const auto& f : v.faces) faces.push_back(f.face);
        r.checks.push_back(faces_check(a, faces));
        r.checks.push_back(face_audit_check(v.faces));
        if (r.samples == 0) {
          r.checks.push_back(skipped("transversality", "no instances requested (--samples 0)"));
        } else {
          r.checks.push_back(transversality_check(v.transversality));
        }
        break;
      }
    }
  } catch (const InvalidMatrix& e) {
    r.checks.clear();
    r.error = InputError{e.hypothesis(), e.what()};
  } catch (const std::exception& e) {
    r.checks.push_back(make("engine", false, std::string("internal error: ") + e.what(), json::object()));
  }
  return r;
}

ReportDocument run_text(Command command, std::string_view text, const RunOptions& options) {
  MatrixInput input;
  try {
    input = parse_input(text);
  } catch (const ParseError& e) {
    ReportDocument r;
    r.command = command_name(command);
    r.seed = options.seed.value_or(0);
    r.samples = options.samples;
    r.error = InputError{"", e.what()};
    return r;
  }
  return run(command, input, options);
}

std::vector<ReportDocument> run_corpus(Command command, const std::filesystem::path& dir,
                                       const RunOptions& options) {
  if (!std::filesystem::is_directory(dir))
    throw std::runtime_error("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().filename().string().front() != '.')
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<ReportDocument> reports(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < files.size(); k = next++) {
      ReportDocument r = run_text(command, read_file(files[k]), options);
      r.source = files[k].filename().string();
      reports[k] = std::move(r);
    }
  };
  const std::size_t threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(files.size(), 1));
  std::vector<std::future<void>> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  return reports;
}

std::string render_summary(const std::vector<ReportDocument>& reports) {
  std::ostringstream out;
  out << std::left << std::setw(28) << "file" << std::setw(16) << "label" << std::setw(4) << "d"
      << std::setw(4) << "n" << std::setw(9) << "status" << std::setw(10) << "char-dim"
      << std::setw(14) << "fiber-degree" << "ms\n";
  std::size_t pass = 0, fail = 0, invalid = 0;
  for (const auto& r : reports) {
    std::string d = "-", n = "-", label = "-", char_dim = "-", degree = "-";
    if (r.input) {
      d = std::to_string(r.input->matrix.rows());
      n = std::to_string(r.input->matrix.cols());
      if (r.input->label) label = *r.input->label;
    }
    for (const auto& c : r.checks) {
      if (c.name == "holonomicity") char_dim = std::to_string(c.details.at("dimension").get<std::size_t>());
      if (c.name == "family" && c.details.contains("common_degree") &&
          !c.details.at("common_degree").is_null())
        degree = std::to_string(c.details.at("common_degree").get<std::size_t>());
    }
    double ms = 0;
    for (const auto& [k, v] : r.timings_ms) ms += v;
    out << std::setw(28) << r.source << std::setw(16) << label << std::setw(4) << d << std::setw(4)
        << n << std::setw(9) << r.status() << std::setw(10) << char_dim << std::setw(14) << degree
        << std::fixed << std::setprecision(1) << ms << "\n";
    pass += r.exit_code() == 0;
    fail += r.exit_code() == 1;
    invalid += r.exit_code() == 2;
  }
  out << reports.size() << " files: " << pass << " pass, " << fail << " fail, " << invalid
      << " invalid\n";
  return out.str();
}

int batch_exit_code(const std::vector<ReportDocument>& reports) {
  int code = 0;
  for (const auto& r : reports) code = std::max(code, r.exit_code());
  return code;
}

}  // namespace gkz::cli
