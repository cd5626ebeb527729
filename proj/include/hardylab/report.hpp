#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardylab/semigroup.hpp"
#include "hardylab/spectrum.hpp"

namespace hardylab::report {

// Minimal JSON value with a deterministic dump: object keys are kept in a
// std::map (lexicographic order) and every real is printed via %.17g, so
// identical inputs produce byte-identical output on a given build.
class Json {
 public:
  enum class Kind { Null, Bool, Int, Real, Str, Arr, Obj };

  Json() = default;
  static Json boolean(bool v);
  static Json integer(long long v);
  static Json real(double v);
  static Json str(std::string v);
  static Json array();
  static Json object();

  Kind kind() const { return kind_; }

  Json& operator[](const std::string& key);  // object insert-or-get
  void push_back(Json v);                    // array append

  const Json* find(const std::string& key) const;
  bool as_bool() const { return bool_; }
  long long as_int() const { return int_; }
  double as_real() const;
  const std::string& as_str() const { return str_; }
  const std::vector<Json>& items() const { return arr_; }
  const std::map<std::string, Json>& fields() const { return obj_; }

  std::string dump(int indent = 2) const;

 private:
  void write(std::string& out, int indent, int depth) const;

  Kind kind_ = Kind::Null;
  bool bool_ = false;
  long long int_ = 0;
  double real_ = 0.0;
  std::string str_;
  std::vector<Json> arr_;
  std::map<std::string, Json> obj_;
};

std::string format_real(double v);
std::string escape_string(const std::string& s);
Json complex_json(std::complex<double> z);

struct Check {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

// Named tolerance table with CLI overrides; unknown keys are a ConfigError.
class Tolerances {
 public:
  static Tolerances defaults();
  double get(const std::string& key) const;
  void set(const std::string& key, double value);
  const std::map<std::string, double>& values() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

struct Outcome {
  Json doc;
  std::vector<std::string> failures;  // names of failed checks
};

struct SpectrumRequest {
  std::optional<int> k_max;
  std::optional<spectrum::NuGrid> nu_grid;
  bool requested() const { return k_max.has_value() || nu_grid.has_value(); }
};

Outcome analyze_report(const semigroup::Family& fam, double p,
                       const std::vector<double>& times,
                       const Tolerances& tol,
                       const SpectrumRequest& spectrum_req);

Outcome norm_report(const semigroup::Family& fam, double p,
                    const std::vector<double>& times, const Tolerances& tol);

Outcome semigroup_check_report(const semigroup::Family& fam,
                               const Tolerances& tol);

Outcome spectrum_report(const semigroup::Family& fam, double p, int k_max,
                        const spectrum::NuGrid& grid, const Tolerances& tol);

// One row per axis value; columns axis,measured,predicted,abs_error.
std::string sweep_csv(const semigroup::Family& fam, const std::string& axis,
                      const std::vector<double>& p_values,
                      const std::vector<double>& times, int n_max,
                      const spectrum::NuGrid& grid);

}  // namespace hardylab::report
