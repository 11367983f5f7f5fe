#ifndef INVLIM_POINTS_HPP
#define INVLIM_POINTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "invlim/exec.hpp"
#include "invlim/poly.hpp"

namespace invlim {

/// Number of rational points q^n, guarded to stay enumerable (<= 10^6).
long long domain_size(const Field& k, int nvars);

/// Canonical enumeration of F_q^n: index = sum_i c_i.index() * q^i. All
/// reports and fiber lists are emitted in ascending index order, which makes
/// them independent of the execution mode.
long long point_index(const std::vector<Scalar>& c);
std::vector<Scalar> point_of_index(const Field& k, int nvars, long long idx);

/// Value of the point map at c. The map's coefficients embed into c's field
/// when that field is an extension of the coefficient field.
std::vector<Scalar> point_map_eval(const PolyEndo& f, const std::vector<Scalar>& c);

/// Full value table over F_q^n: table[i] = point_index of the image of the
/// i-th point. The parallel mode distributes the index range over OpenMP
/// threads; each entry is written exactly once, so the table is identical to
/// the serial one.
std::vector<long long> point_map_table(const PolyEndo& f, const Field& k,
                                       Exec exec = Exec::Serial);

/// Brute-force census of the point map over a named finite field.
struct PointMapReport {
  std::string field_descriptor;
  long long domain_size;
  long long image_size;
  bool injective;
  bool surjective;
  std::vector<std::vector<Scalar>> fixed_points;
  /// Present when a fiber was requested: the base point and its preimages.
  std::optional<std::vector<Scalar>> fiber_over;
  std::vector<std::vector<Scalar>> fiber;
};

PointMapReport enumerate_report(const PolyEndo& f, const Field& k,
                                const std::optional<std::vector<Scalar>>& fiber_over = {},
                                Exec exec = Exec::Serial);

/// All points c with f(c) = a — equivalently, the maximal ideals m_c with
/// f(m_a) contained in m_c. Empty means no rational point of the fiber exists
/// over this field; more than one witnesses non-injectivity over it.
std::vector<std::vector<Scalar>> maximal_ideal_image(const PolyEndo& f,
                                                     const std::vector<Scalar>& a, const Field& k,
                                                     Exec exec = Exec::Serial);

}  // namespace invlim

#endif
