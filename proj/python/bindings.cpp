#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "matchforge/encode.hpp"
#include "matchforge/generate.hpp"
#include "matchforge/solve.hpp"

namespace py = pybind11;
using namespace matchforge;

namespace {

using PairList = std::vector<std::pair<std::string, std::string>>;

PairList to_pairs(const Matching& m) {
  PairList out;
  for (const Pair& p : m.pairs()) out.emplace_back(to_string(p.first), to_string(p.second));
  return out;
}

Matching from_pairs(const PairList& pairs) {
  std::vector<Pair> out;
  for (const auto& [a, b] : pairs) out.push_back({encode::parse_person(a), encode::parse_person(b)});
  return Matching(std::move(out));
}

Criterion criterion(const std::string& name) {
  if (auto c = parse_criterion(name)) return *c;
  throw py::value_error("unknown criterion '" + name + "'");
}

Direction direction(const std::string& name) {
  if (name == "min") return Direction::Minimize;
  if (name == "max") return Direction::Maximize;
  throw py::value_error("direction must be 'min' or 'max'");
}

std::vector<std::vector<std::string>> atoms_of(const std::vector<asp::Interpretation>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) {
    auto& row = out.emplace_back();
    for (const auto& a : s) row.push_back(asp::to_string(a));
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weakly stable matchings with ties and unacceptable partners.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidInstance>(m, "InvalidInstance", PyExc_ValueError);
  py::register_exception<InvalidMatching>(m, "InvalidMatching", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapExceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);

  py::class_<Instance>(m, "Instance")
      .def(py::init([](std::vector<std::vector<std::vector<int>>> men, std::vector<std::vector<std::vector<int>>> women) {
             std::vector<PreferenceList> ml, wl;
             for (auto& g : men) ml.push_back({std::move(g)});
             for (auto& g : women) wl.push_back({std::move(g)});
             return Instance(std::move(ml), std::move(wl));
           }),
           py::arg("men"), py::arg("women"))
      .def_property_readonly("men", &Instance::men)
      .def_property_readonly("women", &Instance::women)
      .def("preferences", [](const Instance& inst, const std::string& person) {
        return inst.preferences(encode::parse_person(person)).groups;
      })
      .def("__str__", &serialize_instance)
      .def("__eq__", [](const Instance& a, const Instance& b) { return a == b; });

  m.def("parse_instance", [](const std::string& text) { return parse_instance(text); });
  m.def("serialize_instance", &serialize_instance);
  m.def("random_instance", &random_instance, py::arg("men"), py::arg("women"), py::arg("ties") = 0.0,
        py::arg("unacceptable") = 0.0, py::arg("seed") = 0);

  m.def(
      "solve",
      [](const Instance& inst, const std::string& proposing, std::optional<std::uint64_t> seed) {
        const Proposer p = proposing == "women" ? Proposer::Women : Proposer::Men;
        return to_pairs(deferred_acceptance(inst, p, seed ? TieBreakPolicy::seeded(*seed) : TieBreakPolicy{}));
      },
      py::arg("instance"), py::arg("proposing") = "men", py::arg("seed") = py::none());

  m.def(
      "enumerate_stable",
      [](const Instance& inst, int max_persons) {
        std::vector<PairList> out;
        for (const auto& s : enumerate_stable(inst, {max_persons}).all_stable) out.push_back(to_pairs(s));
        return out;
      },
      py::arg("instance"), py::arg("max_persons") = 16);

  m.def(
      "optimize",
      [](const Instance& inst, const std::string& crit, const std::string& dir, int max_persons) {
        const auto r = optimize(inst, criterion(crit), direction(dir), {max_persons});
        std::vector<PairList> witnesses;
        for (const auto& s : r.witnesses) witnesses.push_back(to_pairs(s));
        return std::make_pair(r.value, witnesses);
      },
      py::arg("instance"), py::arg("criterion"), py::arg("direction") = "min", py::arg("max_persons") = 16);

  m.def("is_weakly_stable",
        [](const Instance& inst, const PairList& pairs) { return is_weakly_stable(inst, from_pairs(pairs)); });

  m.def("blocking_report", [](const Instance& inst, const PairList& pairs) {
    const auto r = blocking_report(inst, from_pairs(pairs));
    PairList bp;
    for (auto [i, j] : r.blocking_pairs) bp.emplace_back(to_string(man(i)), to_string(woman(j)));
    std::vector<std::string> bi;
    for (PersonRef x : r.blocking_individuals) bi.push_back(to_string(x));
    return std::make_pair(bp, bi);
  });

  m.def("criterion_cost", [](const Instance& inst, const PairList& pairs, const std::string& crit) {
    return criterion_cost(inst, from_pairs(pairs), criterion(crit));
  });

  m.def("pair_is_stable", [](const Instance& inst, const std::string& mi, const std::string& wj) {
    return pair_is_stable(inst, encode::parse_person(mi).index, encode::parse_person(wj).index);
  });

  m.def("exists_stable_with_cardinality", [](const Instance& inst, int k, bool at_least) {
    return exists_stable_with_cardinality(inst, k,
                                          at_least ? CardinalityBound::AtLeastMatched : CardinalityBound::AtMostMatched);
  }, py::arg("instance"), py::arg("k"), py::arg("at_least") = true);

  m.def("encode_normal", [](const Instance& inst) { return asp::format_program(encode::encode_normal(inst)); });
  m.def("encode_disjunctive",
        [](const Instance& inst) { return asp::format_program(encode::encode_disjunctive(inst)); });
  m.def(
      "encode_optimization",
      [](const Instance& inst, const std::string& crit, const std::string& dir) {
        return encode::encode_optimization(inst, criterion(crit), direction(dir));
      },
      py::arg("instance"), py::arg("criterion"), py::arg("direction") = "min");

  m.def(
      "decode_answers",
      [](const Instance& inst, const std::string& text, std::optional<std::string> crit) {
        std::optional<Criterion> c;
        if (crit) c = criterion(*crit);
        std::vector<std::pair<PairList, std::optional<int>>> out;
        for (const auto& s : encode::parse_answer_sets(text)) {
          const auto d = encode::decode_answer(inst, s, c);
          out.emplace_back(to_pairs(d.matching), d.criterion_value);
        }
        return out;
      },
      py::arg("instance"), py::arg("text"), py::arg("criterion") = py::none());

  m.def("answer_sets", [](const std::string& program_text) {
    return atoms_of(asp::enumerate_answer_sets_tight(asp::parse_program(program_text)));
  });
  m.def("is_answer_set", [](const std::string& program_text, const std::vector<std::string>& atoms) {
    return asp::is_answer_set(asp::parse_program(program_text), asp::Interpretation::of(atoms));
  });
}
