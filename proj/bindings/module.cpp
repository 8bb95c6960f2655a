// Python bindings: thin wrappers over the core operations. Structured
// results cross the boundary as plain dicts and lists mirroring the JSON
// schemas of the CLI.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cofinal/json_io.hpp"

namespace py = pybind11;
using namespace cofinal;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list out;
      for (const Json& item : j) out.append(json_to_py(item));
      return out;
    }
    case Json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) {
        out[py::str(it.key())] = json_to_py(it.value());
      }
      return out;
    }
    default: return py::none();
  }
}

Json py_to_json(const py::handle& obj) {
  if (obj.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(obj)) return obj.cast<bool>();
  if (py::isinstance<py::int_>(obj)) return obj.cast<std::int64_t>();
  if (py::isinstance<py::float_>(obj)) return obj.cast<double>();
  if (py::isinstance<py::str>(obj)) return obj.cast<std::string>();
  if (py::isinstance<py::dict>(obj)) {
    Json out = Json::object();
    for (auto item : obj.cast<py::dict>()) {
      out[item.first.cast<std::string>()] = py_to_json(item.second);
    }
    return out;
  }
  if (py::isinstance<py::sequence>(obj)) {
    Json out = Json::array();
    for (auto item : obj.cast<py::sequence>()) out.push_back(py_to_json(item));
    return out;
  }
  throw py::type_error("unsupported value in a json-like argument");
}

FinSet set_arg(const py::handle& obj, const std::string& name) {
  return finset_from_json(py_to_json(obj), name);
}

std::vector<FinSet> family_arg(const py::handle& obj, const std::string& name) {
  return family_from_json(py_to_json(obj), name);
}

PairColoring coloring_arg(const py::handle& obj) {
  return coloring_from_json(py_to_json(obj), "coloring");
}

PartialColoring partial_arg(const py::handle& obj) {
  return partial_from_json(py_to_json(obj), "partial");
}

AnchoredPair pair_arg(const py::handle& part, const py::handle& ground) {
  return AnchoredPair(set_arg(part, "part"), set_arg(ground, "ground"));
}

void translate_error(const Error& e) {
  PyErr_SetString(PyExc_ValueError,
                  (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "partition calculus of pairs over finite-set lattices";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      translate_error(e);
    }
  });

  m.def("canonicalize", [](const std::vector<Label>& labels) {
    return json_to_py(finset_to_json(FinSet::canonicalize(labels)));
  });

  m.def("is_proper_subset", [](py::object x, py::object y) {
    return is_proper_subset(set_arg(x, "x"), set_arg(y, "y"));
  });

  m.def(
      "is_a_extension",
      [](py::object a, py::object A, py::object b, bool proper) {
        return is_a_extension(set_arg(a, "a"), set_arg(A, "A"), set_arg(b, "b"), proper);
      },
      py::arg("a"), py::arg("ground"), py::arg("b"), py::arg("proper") = false);

  m.def("pair_le", [](py::object p_part, py::object p_ground, py::object q_part,
                      py::object q_ground) {
    return pair_le(pair_arg(p_part, p_ground), pair_arg(q_part, q_ground));
  });

  m.def("dominates", [](py::object H, py::object targets) {
    auto report = dominates(family_arg(H, "H"), family_arg(targets, "targets"));
    Json out;
    out["cofinal"] = report.cofinal;
    if (report.counterexample) out["counterexample"] = finset_to_json(*report.counterexample);
    Json witnesses = Json::array();
    for (const auto& [target, witness] : report.witness_map) {
      witnesses.push_back(Json::array({finset_to_json(target), finset_to_json(witness)}));
    }
    out["witness_map"] = std::move(witnesses);
    return json_to_py(out);
  });

  m.def("eval_pair", [](py::object coloring, py::object x, py::object y) {
    return coloring_arg(coloring).eval(set_arg(x, "x"), set_arg(y, "y"));
  });

  m.def("is_f_correct", [](py::object coloring, py::object partial, py::object b) {
    auto result = is_f_correct(coloring_arg(coloring), partial_arg(partial), set_arg(b, "b"));
    Json out;
    out["correct"] = result.correct;
    if (result.first_violation) out["violation"] = finset_to_json(*result.first_violation);
    return json_to_py(out);
  });

  m.def("induced_total_coloring", [](py::object coloring, py::object b, py::object c) {
    return json_to_py(partial_to_json(
        induced_total_coloring(coloring_arg(coloring), set_arg(b, "b"), set_arg(c, "c"))));
  });

  m.def(
      "enumerate_total_colorings",
      [](py::object b, int k, std::size_t cap) {
        py::list out;
        for (const auto& g : enumerate_total_colorings(set_arg(b, "b"), k, cap)) {
          out.append(json_to_py(partial_to_json(g)));
        }
        return out;
      },
      py::arg("b"), py::arg("k") = 2, py::arg("cap") = 4);

  m.def("derive_f_h_a", [](py::object coloring, py::object H, py::object a) {
    auto derived = derive_f_H_a(coloring_arg(coloring), family_arg(H, "H"), set_arg(a, "a"));
    Json out;
    out["partial"] = partial_to_json(derived.f);
    out["omitted"] = family_to_json(derived.omitted);
    return json_to_py(out);
  });

  m.def("extract_end_homogeneous", [](py::object coloring, py::object chain) {
    PairColoring F = coloring_arg(coloring);
    auto cert = extract_end_homogeneous(F, chain_from_json(py_to_json(chain), "chain"));
    return json_to_py(eh_certificate_to_json(cert, F));
  });

  m.def("extract_homogeneous", [](py::object coloring, py::object certificate) {
    PairColoring F = coloring_arg(coloring);
    auto eh = eh_certificate_from_json(py_to_json(certificate), "certificate");
    return json_to_py(homogeneous_certificate_to_json(extract_homogeneous(F, eh), F));
  });

  m.def(
      "countable_cofinal_homogeneous",
      [](py::object coloring, std::size_t steps, py::object ground) {
        PairColoring F = coloring_arg(coloring);
        CofinalHomogeneous result;
        if (ground.is_none()) {
          result = countable_cofinal_homogeneous(F, steps);
        } else {
          auto labels = ground.cast<std::vector<Label>>();
          if (labels.size() < steps) {
            throw py::value_error("ground enumeration shorter than the step count");
          }
          result = countable_cofinal_homogeneous(
              F, [labels](std::size_t i) { return labels[i]; }, steps);
        }
        return json_to_py(cofinal_homogeneous_to_json(result, F));
      },
      py::arg("coloring"), py::arg("steps"), py::arg("ground") = py::none());

  m.def("brute_max_homogeneous", [](py::object coloring, py::object chain) {
    auto result = brute_max_homogeneous(coloring_arg(coloring),
                                        chain_from_json(py_to_json(chain), "chain"));
    Json out;
    out["size"] = result.size;
    out["witness"] = family_to_json(result.witness);
    out["color"] = result.color;
    return json_to_py(out);
  });

  m.def(
      "is_good_bounded",
      [](py::object coloring, py::object part, py::object ground, py::object partial, int width,
         int reserve, std::uint64_t pair_cap) {
        GoodnessLimits limits;
        limits.pair_cap = pair_cap;
        auto verdict = is_good_bounded(coloring_arg(coloring), pair_arg(part, ground),
                                       partial_arg(partial), Window(width, reserve), limits);
        return json_to_py(goodness_verdict_to_json(verdict));
      },
      py::arg("coloring"), py::arg("part"), py::arg("ground"), py::arg("partial"),
      py::arg("width"), py::arg("reserve") = 1, py::arg("pair_cap") = 1'000'000);

  m.def(
      "lemma22_search",
      [](py::object coloring, py::object part, py::object ground, int width, int reserve,
         std::size_t part_cap) -> py::object {
        GoodnessLimits limits;
        limits.part_cap = part_cap;
        auto witness = lemma22_search(coloring_arg(coloring), pair_arg(part, ground),
                                      Window(width, reserve), limits);
        if (!witness) return py::none();
        return json_to_py(lemma_witness_to_json(*witness));
      },
      py::arg("coloring"), py::arg("part"), py::arg("ground"), py::arg("width"),
      py::arg("reserve") = 1, py::arg("part_cap") = 4);

  m.def(
      "lemma23_search",
      [](py::object coloring, py::object p_part, py::object p_ground, py::object partial,
         py::object q_part, py::object q_ground, int width, int reserve,
         std::size_t part_cap) -> py::object {
        GoodnessLimits limits;
        limits.part_cap = part_cap;
        auto witness =
            lemma23_search(coloring_arg(coloring), pair_arg(p_part, p_ground),
                           partial_arg(partial), pair_arg(q_part, q_ground),
                           Window(width, reserve), limits);
        if (!witness) return py::none();
        return json_to_py(lemma_witness_to_json(*witness));
      },
      py::arg("coloring"), py::arg("p_part"), py::arg("p_ground"), py::arg("partial"),
      py::arg("q_part"), py::arg("q_ground"), py::arg("width"), py::arg("reserve") = 1,
      py::arg("part_cap") = 4);

  m.def(
      "build_approximation",
      [](py::object coloring, int width, int reserve, std::size_t depth) {
        return json_to_py(approximation_to_json(
            build_approximation(coloring_arg(coloring), Window(width, reserve), depth)));
      },
      py::arg("coloring"), py::arg("width"), py::arg("reserve") = 2, py::arg("depth") = 6);

  m.def(
      "extend_approximation",
      [](py::object coloring, py::object approximation, Label xi, int width, int reserve,
         std::size_t depth) {
        auto approx = approximation_from_json(py_to_json(approximation), "approximation");
        return json_to_py(approximation_to_json(extend_approximation(
            coloring_arg(coloring), approx, xi, Window(width, reserve), depth)));
      },
      py::arg("coloring"), py::arg("approximation"), py::arg("xi"), py::arg("width"),
      py::arg("reserve") = 2, py::arg("depth") = 3);

  m.def(
      "verify_approximation",
      [](py::object coloring, py::object approximation, int width, int reserve) {
        auto approx = approximation_from_json(py_to_json(approximation), "approximation");
        return json_to_py(approximation_report_to_json(
            verify_approximation(coloring_arg(coloring), approx, Window(width, reserve))));
      },
      py::arg("coloring"), py::arg("approximation"), py::arg("width"), py::arg("reserve") = 2);

  m.def("laver_build", [](py::object registry) {
    return json_to_py(laver_state_to_json(
        laver_build(laver_registry_from_json(py_to_json(registry), "registry"))));
  });

  m.def(
      "laver_verify",
      [](py::object registry, Label beta, Color default_color) {
        LaverState state =
            laver_build(laver_registry_from_json(py_to_json(registry), "registry"));
        PairColoring F = laver_complete(state, default_color);
        return json_to_py(laver_witnesses_to_json(laver_verify(state, F, beta)));
      },
      py::arg("registry"), py::arg("beta"), py::arg("default_color") = 1);

  m.def(
      "laver_complete",
      [](py::object registry, Color default_color) {
        LaverState state =
            laver_build(laver_registry_from_json(py_to_json(registry), "registry"));
        return json_to_py(coloring_to_json(laver_complete(state, default_color)));
      },
      py::arg("registry"), py::arg("default_color") = 1);

  m.def(
      "sweep_colorings",
      [](int width, int k, bool exhaustive, std::uint64_t seed, std::size_t samples,
         std::size_t min_chain, std::size_t jobs) {
        SweepOptions options;
        options.window = width;
        options.k = k;
        options.exhaustive = exhaustive;
        options.seed = seed;
        options.samples = samples;
        options.min_chain = min_chain;
        options.jobs = jobs;
        return json_to_py(sweep_report_to_json(sweep_colorings(options)));
      },
      py::arg("width"), py::arg("k") = 2, py::arg("exhaustive") = true, py::arg("seed") = 0,
      py::arg("samples") = 0, py::arg("min_chain") = 1, py::arg("jobs") = 1);

  m.def(
      "char_width",
      [](py::object poset, std::size_t bound, bool exact) {
        Json j = py_to_json(poset);
        CharWidthResult result;
        std::vector<std::string> labels;
        if (j.contains("generator")) {
          GeneratedPrefix prefix = materialize(generated_from_json(j, "generated"));
          labels = prefix.node_labels;
          result = char_width(prefix, bound, exact);
        } else {
          FinPoset p = poset_from_json(j, "poset");
          labels = p.node_labels();
          result = char_width(p, bound, exact);
        }
        return json_to_py(char_width_result_to_json(result, labels));
      },
      py::arg("poset"), py::arg("bound") = 0, py::arg("exact") = false);

  m.attr("__version__") = "0.1.0";
  m.attr("SCHEMA") = kSchemaTag;
}
