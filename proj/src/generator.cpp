#include "motivic/generator.hpp"

namespace motivic {

namespace {

void validate(const std::string& name, int dim, const MeasureData& data) {
    if (name.empty()) throw std::invalid_argument("generator name must be nonempty");
    if (dim < 0) throw std::invalid_argument("generator '" + name + "': dim must be >= 0");
    if (data.point_counts) {
        for (const Int& n : *data.point_counts)
            if (n < 0)
                throw std::invalid_argument("generator '" + name +
                                            "': point counts must be nonnegative");
    }
    if (data.e_polynomial && !data.e_polynomial->is_zero()) {
        const int du = data.e_polynomial->degree_u();
        const int dv = data.e_polynomial->degree_v();
        if (du + dv > 2 * dim)
            throw std::invalid_argument("generator '" + name +
                                        "': E-polynomial degree exceeds 2*dim");
    }
    if (data.e_polynomial && data.poincare_polynomial) {
        // Euler characteristic must agree between the two descriptions.
        const Int from_e = (*data.e_polynomial)(1, 1);
        const Int from_p = (*data.poincare_polynomial)(-1);
        if (from_e != from_p)
            throw std::invalid_argument("generator '" + name +
                                        "': E(1,1) != Poincare(-1), inconsistent data");
    }
}

} // namespace

Generator::Generator(std::string name, int dim, bool smooth, bool proper, MeasureData data) {
    validate(name, dim, data);
    d_ = std::make_shared<const Data>(
        Data{std::move(name), dim, smooth, proper, std::move(data)});
}

Generator Registry::define(std::string name, int dim, bool smooth, bool proper,
                           MeasureData data) {
    Generator g(std::move(name), dim, smooth, proper, std::move(data));
    return add(g);
}

Generator Registry::add(const Generator& g) {
    auto [it, inserted] = table_.emplace(g.name(), g);
    if (!inserted)
        throw std::invalid_argument("registry: duplicate generator name '" + g.name() + "'");
    return g;
}

const Generator* Registry::find(const std::string& name) const {
    auto it = table_.find(name);
    return it == table_.end() ? nullptr : &it->second;
}

Generator Registry::at(const std::string& name) const {
    const Generator* g = find(name);
    if (!g) throw std::invalid_argument("registry: unknown generator '" + name + "'");
    return *g;
}

} // namespace motivic
