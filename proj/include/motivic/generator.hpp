#pragma once

#include "motivic/poly.hpp"

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace motivic {

// Optional cohomological data carried by a generator, consumed by the
// measure homomorphisms. point_counts[m-1] is the number of points over the
// degree-m extension of the generator's base field.
struct MeasureData {
    std::optional<std::vector<Int>> point_counts;
    std::optional<BiPoly> e_polynomial;
    std::optional<Poly> poincare_polynomial;
};

// A named class of a variety, used as a free commutative-ring generator.
// Identity is the name; dimension and the smooth/proper flags feed the
// duality map and the dimension filtration. Immutable and cheaply copyable.
class Generator {
public:
    Generator(std::string name, int dim, bool smooth = true, bool proper = true,
              MeasureData data = {});

    const std::string& name() const { return d_->name; }
    int dim() const { return d_->dim; }
    bool smooth() const { return d_->smooth; }
    bool proper() const { return d_->proper; }
    const MeasureData& data() const { return d_->data; }

    friend bool operator==(const Generator& a, const Generator& b) {
        return a.name() == b.name();
    }
    friend std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
        return a.name() <=> b.name();
    }

private:
    struct Data {
        std::string name;
        int dim;
        bool smooth;
        bool proper;
        MeasureData data;
    };
    std::shared_ptr<const Data> d_;
};

// A name -> generator table enforcing name uniqueness. Parsing serialized
// ring elements resolves generator names through one of these.
class Registry {
public:
    // throws std::invalid_argument if the name is already taken
    Generator define(std::string name, int dim, bool smooth = true, bool proper = true,
                     MeasureData data = {});
    Generator add(const Generator& g); // register an existing generator

    const Generator* find(const std::string& name) const;
    Generator at(const std::string& name) const; // throws if missing

    const std::map<std::string, Generator>& table() const { return table_; }

private:
    std::map<std::string, Generator> table_;
};

} // namespace motivic
