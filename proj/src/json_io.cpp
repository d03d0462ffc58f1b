#include "antidist/json_io.hpp"

#include <fstream>

namespace antidist {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError("expected [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
    Json data = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        data.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
    try {
        const auto rows = j.at("rows").get<Eigen::Index>();
        const auto cols = j.at("cols").get<Eigen::Index>();
        if (rows < 1 || cols < 1) throw ParseError("matrix dimensions must be positive");
        const Json& data = j.at("data");
        if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows)
            throw ParseError("row count mismatch");
        ComplexMatrix m(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i) {
            const Json& row = data[static_cast<std::size_t>(i)];
            if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
                throw ParseError("column count mismatch");
            for (Eigen::Index c = 0; c < cols; ++c)
                m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
        }
        if (!is_finite(m)) throw ParseError("non-finite matrix entry");
        return m;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad matrix object: ") + e.what());
    }
}

Json state_to_json(const PureState& s) {
    Json amps = Json::array();
    for (Eigen::Index i = 0; i < s.amplitudes().size(); ++i)
        amps.push_back(complex_to_json(s.amplitudes()(i)));
    return Json{{"dim", s.dim()}, {"amps", std::move(amps)}};
}

PureState state_from_json(const Json& j) {
    try {
        const auto dim = j.at("dim").get<Eigen::Index>();
        const Json& amps = j.at("amps");
        if (!amps.is_array() || static_cast<Eigen::Index>(amps.size()) != dim)
            throw ParseError("amplitude count mismatch");
        ComplexVector v(dim);
        for (Eigen::Index i = 0; i < dim; ++i)
            v(i) = complex_from_json(amps[static_cast<std::size_t>(i)]);
        return PureState(std::move(v), 1e-9);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad state object: ") + e.what());
    } catch (const OutOfRangeError& e) {
        throw ParseError(std::string("bad state: ") + e.what());
    }
}

Json ensemble_to_json(const StateEnsemble& e) {
    Json states = Json::array();
    for (const auto& m : e.members()) states.push_back(matrix_to_json(m.matrix()));
    Json priors = Json::array();
    for (Eigen::Index k = 0; k < e.priors().size(); ++k) priors.push_back(e.priors()(k));
    return Json{{"priors", std::move(priors)}, {"states", std::move(states)}};
}

StateEnsemble ensemble_from_json(const Json& j) {
    try {
        const Json& states = j.at("states");
        if (!states.is_array() || states.empty()) throw ParseError("no states");
        std::vector<DensityMatrix> members;
        for (const Json& s : states) {
            if (s.contains("amps"))
                members.push_back(DensityMatrix::from_pure(state_from_json(s)));
            else
                members.push_back(DensityMatrix(matrix_from_json(s)));
        }
        RealVector priors(static_cast<Eigen::Index>(members.size()));
        if (j.contains("priors")) {
            const Json& p = j.at("priors");
            if (!p.is_array() || p.size() != members.size())
                throw ParseError("prior count mismatch");
            for (std::size_t k = 0; k < p.size(); ++k)
                priors(static_cast<Eigen::Index>(k)) = p[k].get<double>();
        } else {
            priors.setConstant(1.0 / static_cast<double>(members.size()));
        }
        return StateEnsemble(std::move(members), std::move(priors));
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad ensemble object: ") + e.what());
    } catch (const OutOfRangeError& e) {
        throw ParseError(std::string("bad ensemble: ") + e.what());
    } catch (const NonSquareError& e) {
        throw ParseError(std::string("bad ensemble member: ") + e.what());
    }
}

Json probe_to_json(const ProbeSpec& p) {
    if (p.is_single()) return Json{{"kind", "single"}, {"state", state_to_json(p.as_single().state)}};
    if (p.is_maxent()) return Json{{"kind", "maxent"}};
    const EntangledProbe& e = p.as_entangled();
    Json schmidt = Json::array();
    for (Eigen::Index w = 0; w < e.schmidt.size(); ++w) schmidt.push_back(e.schmidt(w));
    return Json{{"kind", "entangled"},
                {"schmidt", std::move(schmidt)},
                {"a_basis", matrix_to_json(e.a_basis.matrix())}};
}

ProbeSpec probe_from_json(const Json& j) {
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "single") return ProbeSpec::single(state_from_json(j.at("state")));
        if (kind == "maxent") return ProbeSpec::maxent();
        if (kind == "entangled") {
            const Json& s = j.at("schmidt");
            RealVector w(static_cast<Eigen::Index>(s.size()));
            for (std::size_t k = 0; k < s.size(); ++k)
                w(static_cast<Eigen::Index>(k)) = s[k].get<double>();
            return ProbeSpec::entangled(std::move(w),
                                        validate_unitary(matrix_from_json(j.at("a_basis")), 1e-9),
                                        1e-9);
        }
        throw ParseError("unknown probe kind '" + kind + "'");
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad probe object: ") + e.what());
    } catch (const Error& e) {
        throw ParseError(std::string("bad probe: ") + e.what());
    }
}

Json povm_to_json(const Povm& p) {
    Json effects = Json::array();
    for (const auto& e : p.effects) effects.push_back(matrix_to_json(e));
    return Json{{"effects", std::move(effects)}};
}

Json result_to_json(const AntidistResult& r) {
    return Json{{"value", r.value},
                {"gap", r.gap},
                {"povm", povm_to_json(r.povm)},
                {"dual", matrix_to_json(r.dual_certificate)}};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

void save_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << j.dump(2) << "\n";
}

}  // namespace antidist
