#include "turan/serialize.hpp"

#include <sstream>

#include "turan/util.hpp"

namespace turan {

nlohmann::json to_json(const Hypergraph& g) {
    return {{"k", g.k()}, {"n", g.n()}, {"edges", g.edges()}};
}

nlohmann::json to_json(const PartialHypergraph& f) {
    return {{"k", f.k()}, {"n", f.n()}, {"faces", f.maximal_faces()}};
}

nlohmann::json to_json(const OptResult& r) {
    return {{"value", r.value},
            {"weights", r.weights},
            {"p", r.p},
            {"starts", r.starts},
            {"converged", r.converged},
            {"iterations", r.iterations},
            {"seed", r.seed},
            {"kkt_residual", r.kkt_residual}};
}

nlohmann::json to_json(const EntropicResult& r) {
    return {{"value", r.value},
            {"objective_log2", r.objective_log2},
            {"q", r.q},
            {"converged", r.converged},
            {"iterations", r.iterations},
            {"starts", r.starts},
            {"pruned", r.pruned},
            {"seed", r.seed}};
}

nlohmann::json to_json(const RatioSequence& r) {
    return {{"x", r.x}, {"product", r.product()}};
}

nlohmann::json to_json(const CheckReport& r) {
    return {{"claim", r.claim},
            {"instance", r.instance},
            {"lhs", r.lhs},
            {"rhs", r.rhs},
            {"slack", r.slack},
            {"tolerance", r.tolerance},
            {"pass", r.pass},
            {"hypothesis_ok", r.hypothesis_ok},
            {"note", r.note}};
}

nlohmann::json to_json(const CriterionResult& r) {
    return {{"id", r.id},
            {"name", r.name},
            {"pass", r.pass},
            {"detail", r.detail},
            {"seconds", r.seconds}};
}

nlohmann::json to_json(const DerivedConstraint& c) {
    return {{"family", c.family},
            {"k", c.k},
            {"i", c.i},
            {"j", c.j},
            {"r", c.r},
            {"description", c.description},
            {"provenance", c.provenance}};
}

nlohmann::json to_json(const CertifyResult& c) {
    return {{"a", c.a}, {"unions_checked", c.unions_checked}};
}

nlohmann::json to_json(const DesignSearchResult& d) {
    return {{"design", to_json(d.design)},
            {"pair_degrees", d.pair_degrees},
            {"intersection_histogram", d.intersection_histogram},
            {"nodes_explored", d.nodes_explored},
            {"completions", d.completions},
            {"isomorphism_classes", d.isomorphism_classes},
            {"density", d.density},
            {"density_ratio", d.density_ratio},
            {"indep_ratio", d.indep_ratio}};
}

nlohmann::json to_json(const SampledHom& s) {
    return {{"entropy", s.entropy},
            {"entropy_formula", s.entropy_formula},
            {"max_marginal_dev", s.max_marginal_dev},
            {"marginals_ok", s.marginals_ok},
            {"support_size", s.joint.size()}};
}

namespace {

void dump17_rec(const nlohmann::json& j, std::ostream& os, int indent, int depth) {
    const std::string pad(static_cast<size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << "{\n";
            size_t i = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++i) {
                os << pad_in << nlohmann::json(it.key()).dump() << ": ";
                dump17_rec(it.value(), os, indent, depth + 1);
                if (i + 1 < j.size()) os << ",";
                os << "\n";
            }
            os << pad << "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            os << "[\n";
            for (size_t i = 0; i < j.size(); ++i) {
                os << pad_in;
                dump17_rec(j[i], os, indent, depth + 1);
                if (i + 1 < j.size()) os << ",";
                os << "\n";
            }
            os << pad << "]";
            return;
        }
        case nlohmann::json::value_t::number_float:
            os << format_g17(j.get<double>());
            return;
        default:
            os << j.dump();
            return;
    }
}

}  // namespace

std::string dump17(const nlohmann::json& j, int indent) {
    std::ostringstream os;
    dump17_rec(j, os, indent, 0);
    os << "\n";
    return os.str();
}

}  // namespace turan
