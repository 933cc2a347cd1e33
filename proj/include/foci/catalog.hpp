#pragma once

#include <map>
#include <string>

#include "foci/seifert.hpp"

namespace foci {

// Seifert matrix of the (2, 2k+1) torus knot: upper-bidiagonal 2k x 2k with
// -1 on the diagonal and 1 above it.  k = 1 gives the trefoil.
SeifertMatrix torus_knot_2_seifert(long k);

// Built-in knot table plus user extensions loaded from JSON
// (array of {"label": string, "seifert": [[int]]}).
class KnotCatalog {
  public:
    KnotCatalog();  // unknot, trefoil, figure_eight, t2_5, t2_7

    const SeifertMatrix& lookup(const std::string& label) const;
    bool contains(const std::string& label) const { return table_.count(label) != 0; }
    void add(const std::string& label, SeifertMatrix v);
    void load_json_file(const std::string& path);
    void load_json_text(const std::string& text);

    const std::map<std::string, SeifertMatrix>& table() const { return table_; }

  private:
    std::map<std::string, SeifertMatrix> table_;
};

}  // namespace foci
