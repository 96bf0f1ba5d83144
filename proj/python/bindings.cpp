#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "qwalk/config.hpp"
#include "qwalk/hitting.hpp"
#include "qwalk/kinematics.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

namespace py = pybind11;
using namespace qwalk;

namespace {

struct Session {
    GroupSpec spec;
    GeneratorSet gens;
    Coin coin;

    Session(const std::string& group, const std::string& gens_text,
            const std::string& coin_text)
        : spec(parse_group(group)),
          gens(parse_gens(gens_text, spec)),
          coin(parse_coin(coin_text, gens.size())) {}
};

std::vector<Complex> to_vector(const Eigen::VectorXcd& v) {
    return {v.data(), v.data() + v.size()};
}

Eigen::VectorXcd to_eigen(const std::vector<Complex>& v) {
    Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
    for (Eigen::Index i = 0; i < out.size(); ++i)
        out(i) = v[static_cast<std::size_t>(i)];
    return out;
}

}  // namespace

PYBIND11_MODULE(_qwalk, m) {
    m.doc() =
        "Coined discrete-time quantum walks on Cayley graphs of finite "
        "Abelian groups and the line";

    py::class_<DispersionPoint>(m, "DispersionPoint")
        .def_readonly("wave_number", &DispersionPoint::wave_number)
        .def_readonly("branch", &DispersionPoint::branch)
        .def_readonly("omega", &DispersionPoint::omega)
        .def_readonly("group_velocity", &DispersionPoint::group_velocity)
        .def_readonly("phase_velocity", &DispersionPoint::phase_velocity);

    py::class_<VelocityProfile>(m, "VelocityProfile")
        .def_readonly("v_g_max", &VelocityProfile::v_g_max)
        .def_readonly("argmax_wave_number",
                      &VelocityProfile::argmax_wave_number)
        .def_readonly("argmax_branch", &VelocityProfile::argmax_branch);

    py::class_<HittingResult>(m, "HittingResult")
        .def_readonly("reached", &HittingResult::reached)
        .def_readonly("value", &HittingResult::value)
        .def_readonly("threshold", &HittingResult::threshold)
        .def_readonly("t_max", &HittingResult::t_max)
        .def_readonly("peak_probability", &HittingResult::peak_probability)
        .def_readonly("peak_time", &HittingResult::peak_time)
        .def_readonly("residual_mass", &HittingResult::residual_mass);

    py::class_<GvHittingResult>(m, "GvHittingResult")
        .def_readonly("distance", &GvHittingResult::distance)
        .def_readonly("v_g_max", &GvHittingResult::v_g_max)
        .def_readonly("hitting_time", &GvHittingResult::hitting_time);

    py::class_<Session>(m, "Walk")
        .def(py::init<const std::string&, const std::string&,
                      const std::string&>(),
             py::arg("group"), py::arg("gens") = "unit",
             py::arg("coin") = "grover")
        .def_property_readonly(
            "coin_dim", [](const Session& s) { return s.gens.size(); })
        .def("dispersion",
             [](const Session& s, int grid) {
                 auto table = dispersion_table(s.coin, s.spec, s.gens, grid);
                 fill_velocities(table);
                 return table.rows;
             },
             py::arg("grid") = 1025)
        .def("velocity_summary",
             [](const Session& s, int grid) {
                 auto table = dispersion_table(s.coin, s.spec, s.gens, grid);
                 fill_velocities(table);
                 return velocity_summary(table);
             },
             py::arg("grid") = 1025)
        .def("evolve",
             [](const Session& s, const std::string& init,
                const std::vector<std::int64_t>& start, int t) {
                 const auto phi = parse_init(init, s.spec, s.gens);
                 auto state = WalkState::point_start(
                     s.spec, s.gens, start, phi,
                     s.spec.is_line() ? std::abs(start.at(0)) + t : 0);
                 evolve(state, s.coin, t);
                 const auto dist = position_distribution(state);
                 return std::vector<double>(dist.data(),
                                            dist.data() + dist.size());
             },
             py::arg("init"), py::arg("start"), py::arg("t"))
        .def("amplitudes",
             [](const Session& s, const std::string& init,
                const std::vector<std::int64_t>& start, int t) {
                 const auto phi = parse_init(init, s.spec, s.gens);
                 auto state = WalkState::point_start(
                     s.spec, s.gens, start, phi,
                     s.spec.is_line() ? std::abs(start.at(0)) + t : 0);
                 evolve(state, s.coin, t);
                 return to_vector(state.amplitudes());
             },
             py::arg("init"), py::arg("start"), py::arg("t"))
        .def("one_shot",
             [](const Session& s, const std::vector<std::int64_t>& from,
                const std::vector<std::int64_t>& to, double threshold,
                int t_max, const std::string& init) {
                 const auto phi = parse_init(init, s.spec, s.gens);
                 return one_shot(from, to, s.coin, phi, threshold, t_max,
                                 s.spec, s.gens);
             },
             py::arg("from_vertex"), py::arg("to_vertex"),
             py::arg("threshold"), py::arg("t_max"),
             py::arg("init") = "default")
        .def("concurrent",
             [](const Session& s, const std::vector<std::int64_t>& from,
                const std::vector<std::int64_t>& to, double threshold,
                int t_max, const std::string& init) {
                 const auto phi = parse_init(init, s.spec, s.gens);
                 return concurrent(from, to, s.coin, phi, threshold, t_max,
                                   s.spec, s.gens);
             },
             py::arg("from_vertex"), py::arg("to_vertex"),
             py::arg("threshold"), py::arg("t_max"),
             py::arg("init") = "default")
        .def("average",
             [](const Session& s, const std::vector<std::int64_t>& from,
                const std::vector<std::int64_t>& to, int t_max,
                double eps_tail, const std::string& init) {
                 const auto phi = parse_init(init, s.spec, s.gens);
                 return average(from, to, s.coin, phi, t_max, eps_tail,
                                s.spec, s.gens);
             },
             py::arg("from_vertex"), py::arg("to_vertex"), py::arg("t_max"),
             py::arg("eps_tail") = 1e-9, py::arg("init") = "default")
        .def("peak_arrival",
             [](const Session& s, const std::vector<std::int64_t>& from,
                const std::vector<std::int64_t>& to, int t_max,
                const std::string& init) {
                 const auto phi = parse_init(init, s.spec, s.gens);
                 return peak_arrival(from, to, s.coin, phi, t_max, s.spec,
                                     s.gens);
             },
             py::arg("from_vertex"), py::arg("to_vertex"), py::arg("t_max"),
             py::arg("init") = "default")
        .def("gv_hitting_time",
             [](const Session& s, const std::vector<std::int64_t>& from,
                const std::vector<std::int64_t>& to) {
                 return gv_hitting_time(from, to, s.coin, s.spec, s.gens);
             },
             py::arg("from_vertex"), py::arg("to_vertex"))
        .def("graph_distance",
             [](const Session& s, const std::vector<std::int64_t>& a,
                const std::vector<std::int64_t>& b) {
                 return graph_distance(a, b, s.gens, s.spec);
             });

    m.def("fourier",
          [](const std::vector<Complex>& amplitudes, const std::string& group,
             bool inverse) {
              const auto spec = parse_group(group);
              return to_vector(fourier_transform(
                  to_eigen(amplitudes), spec,
                  inverse ? FourierDirection::Inverse
                          : FourierDirection::Forward));
          },
          py::arg("amplitudes"), py::arg("group"), py::arg("inverse") = false);
}
