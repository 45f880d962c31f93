#include "coverdyn/multicurve.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace coverdyn {

RatMatrix RatMatrix::identity(std::size_t size) {
    RatMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (n != other.n) throw std::invalid_argument("matrix size mismatch");
    RatMatrix result(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const Rat& left = at(i, k);
            if (left == 0) continue;
            for (std::size_t j = 0; j < n; ++j) result.at(i, j) += left * other.at(k, j);
        }
    return result;
}

RatMatrix RatMatrix::operator+(const RatMatrix& other) const {
    if (n != other.n) throw std::invalid_argument("matrix size mismatch");
    RatMatrix result(n);
    for (std::size_t i = 0; i < n * n; ++i) result.a[i] = a[i] + other.a[i];
    return result;
}

std::vector<Rat> RatMatrix::apply(const std::vector<Rat>& v) const {
    if (v.size() != n) throw std::invalid_argument("vector size mismatch");
    std::vector<Rat> result(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (at(i, j) != 0) result[i] += at(i, j) * v[j];
    return result;
}

Rat RatMatrix::inf_norm() const {
    Rat best = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Rat row = 0;
        for (std::size_t j = 0; j < n; ++j) row += abs(at(i, j));
        if (row > best) best = row;
    }
    return best;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& keep) const {
    RatMatrix result(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < keep.size(); ++j) result.at(i, j) = at(keep[i], keep[j]);
    return result;
}

std::optional<std::size_t> LabeledMulticurve::index_of(const std::string& id) const {
    for (std::size_t i = 0; i < curves.size(); ++i)
        if (curves[i] == id) return i;
    return std::nullopt;
}

int LiftingData::inferred_degree() const {
    std::optional<int> degree;
    for (const auto& [curve, parts] : components) {
        int sum = 0;
        for (const auto& part : parts) sum += part.degree;
        if (degree && *degree != sum)
            throw std::invalid_argument("lifting degrees of '" + curve +
                                        "' sum to a different total than earlier curves");
        degree = sum;
    }
    if (!degree) throw std::invalid_argument("empty lifting data has no degree");
    return *degree;
}

void require_consistent(const LabeledMulticurve& multicurve, const LiftingData& lifting, int degree) {
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    std::set<std::string> known(multicurve.curves.begin(), multicurve.curves.end());
    if (known.size() != multicurve.curves.size())
        throw std::invalid_argument("duplicate curve id in multicurve");
    for (const auto& [id, label] : multicurve.labels) {
        if (!known.count(id)) throw std::invalid_argument("label on unknown curve '" + id + "'");
        if (label < 0) throw std::invalid_argument("negative label on curve '" + id + "'");
    }
    for (const auto& [child, parent] : multicurve.nesting) {
        if (!known.count(child) || !known.count(parent))
            throw std::invalid_argument("nesting references unknown curve");
        // Walk to the root; a revisit of the child means a cycle.
        std::string cursor = parent;
        std::size_t steps = 0;
        while (true) {
            if (cursor == child) throw std::invalid_argument("nesting contains a cycle at '" + child + "'");
            auto it = multicurve.nesting.find(cursor);
            if (it == multicurve.nesting.end()) break;
            cursor = it->second;
            if (++steps > multicurve.nesting.size())
                throw std::invalid_argument("nesting contains a cycle");
        }
    }
    for (const auto& id : multicurve.curves) {
        auto it = lifting.components.find(id);
        if (it == lifting.components.end())
            throw std::invalid_argument("no lifting data for curve '" + id + "'");
        int sum = 0;
        for (const auto& part : it->second) {
            if (part.degree < 1) throw std::invalid_argument("component degree must be >= 1");
            if (part.kind == LiftClass::Curve && !known.count(part.curve))
                throw std::invalid_argument("component of '" + id + "' names unknown curve '" +
                                            part.curve + "'");
            sum += part.degree;
        }
        if (sum != degree) {
            std::ostringstream os;
            os << "components of '" << id << "' carry total degree " << sum << ", expected " << degree;
            throw std::invalid_argument(os.str());
        }
    }
    for (const auto& [id, parts] : lifting.components) {
        (void)parts;
        if (!known.count(id)) throw std::invalid_argument("lifting data for unknown curve '" + id + "'");
    }
}

}  // namespace coverdyn
