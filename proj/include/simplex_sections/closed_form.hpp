#pragma once

#include "simplex_sections/direction.hpp"
#include "simplex_sections/subspace.hpp"

namespace simplex_sections {

/// Directions whose sections are the face-parallel (conjectured minimal) and
/// the n-1 vertex (maximal) central hyperplane sections.
Direction special_min_direction(int n);
Direction special_max_direction(int n);

double special_min_volume(int n);
double special_max_volume(int n);

/// sqrt(n+1-K^2)/(n-1)!; throws DegenerateInput when n+1-K^2 <= 0.
double hyperplane_prefactor(int n, double ksum);

/// Normalized section functional: sum over positive coordinates of
/// (1/a_j) prod_{k != j} a_j/(a_j - a_k). Coordinates that coincide are
/// treated as a higher-order pole instead of being divided by their gap.
double f_value(const Direction& a);

/// (n-1)-volume of H_a cap S via the residue sum. `err` holds the
/// rounding bound of the sum plus the error from merging near-ties.
VolumeResult residue_volume(const Direction& a);

Direction central_to_embedded(const CentralForm& cf);
/// Throws DegenerateInput if (sum b)^2 >= n+1.
CentralForm embedded_to_central(const Direction& b);

/// Distance from the centroid of S to H_b cap S.
double centroid_distance(const Direction& b);

/// dist(H cap {sum x = 1}, 0).
double subspace_origin_distance(const SubspaceBasis& h);

struct NoncentralBound {
  double bound;
  Direction maximizer;
};

/// Upper bound on hyperplane sections with sum(a) = K, 0 <= K <= 1, and
/// the direction attaining it.
NoncentralBound max_noncentral_bound(int n, double ksum);

struct KdimBounds {
  double general;      ///< any k-subspace through the centroid
  double conditional;  ///< sharp bound under the vertex-distance condition
};

KdimBounds bl_bounds(int n, int k);

/// Threshold on dist(H, e_j)^2 under which `KdimBounds::conditional` holds.
double kdim_distance_threshold(int n, int k);

}  // namespace simplex_sections
