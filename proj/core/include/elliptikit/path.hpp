#pragma once

#include <vector>

#include "elliptikit/lattice.hpp"

namespace elliptikit {

// Puncture representatives S~ (0 always included) and their lattice translates.
class PunctureSet {
 public:
  explicit PunctureSet(const LatticeContext& ctx, std::vector<Complex> representatives = {});

  const LatticeContext& context() const { return *ctx_; }
  const std::vector<Complex>& representatives() const { return reps_; }
  // Index of the representative congruent to z modulo the lattice, or -1.
  int index_of(Complex a, double tol = 1e-12) const;
  Complex nearest(Complex z) const;
  double distance(Complex z) const;
  // Distance from the segment [a, b] to pr^-1(S); points within `skip_radius` of `skip` are ignored.
  double segment_distance(Complex a, Complex b, Complex skip = 0.0, double skip_radius = -1.0) const;

 private:
  const LatticeContext* ctx_;
  std::vector<Complex> reps_;
};

enum class StartMode {
  regular,      // every segment keeps eps_path from pr^-1(S)
  at_puncture,  // the start vertex may sit at (or near) a puncture; that puncture is ignored on segment one
};

class Path {
 public:
  explicit Path(std::vector<Complex> vertices);
  static Path segment(Complex a, Complex b) { return Path({a, b}); }

  const std::vector<Complex>& vertices() const { return vertices_; }
  Complex start() const { return vertices_.front(); }
  Complex end() const { return vertices_.back(); }
  std::size_t segment_count() const { return vertices_.size() - 1; }
  double length() const;
  Path reversed() const;
  // Concatenation; throws endpoint_mismatch unless end() == other.start().
  Path then(const Path& other) const;
  Path with_start(Complex new_start) const;
  Path with_end_extended(Complex z) const;

  void validate(const PunctureSet& punctures, double eps_path, StartMode mode = StartMode::regular) const;

 private:
  std::vector<Complex> vertices_;
};

}  // namespace elliptikit
