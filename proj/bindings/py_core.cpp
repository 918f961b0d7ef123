#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fintop/docio.hpp"
#include "fintop/enumerate.hpp"
#include "fintop/errors.hpp"
#include "fintop/game.hpp"
#include "fintop/generate.hpp"
#include "fintop/quotient.hpp"
#include "fintop/sweeps.hpp"
#include "fintop/transfer.hpp"
#include "fintop/witness.hpp"

namespace py = pybind11;
using namespace fintop;

PYBIND11_MODULE(_core, m) {
    m.doc() = "explicit finite topological spaces: separation witnesses, quotients, "
              "the open-open game, and witness transfer along irreducible maps";
    m.attr("__version__") = "0.1.0";

    py::register_exception<resource_limit_error>(m, "ResourceLimitError");
    py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<game_error>(m, "GameError");

    // ---- point sets and spaces ----

    py::class_<PointSet>(m, "PointSet")
        .def(py::init([](const std::vector<Point>& pts) { return PointSet::from_points(pts); }),
             py::arg("points"))
        .def_static("empty_set", &PointSet::empty_set)
        .def_static("full_set", &PointSet::full_set, py::arg("n"))
        .def_static("singleton", &PointSet::singleton, py::arg("x"))
        .def_property_readonly("bits", &PointSet::bits)
        .def("contains", &PointSet::contains, py::arg("x"))
        .def("__contains__", &PointSet::contains)
        .def("empty", &PointSet::empty)
        .def("__len__", &PointSet::size)
        .def("size", &PointSet::size)
        .def(py::self | py::self)
        .def(py::self & py::self)
        .def("minus", &PointSet::minus)
        .def("complement_in", &PointSet::complement_in, py::arg("n"))
        .def("with_point", &PointSet::with, py::arg("x"))
        .def("subset_of", &PointSet::subset_of)
        .def("intersects", &PointSet::intersects)
        .def("points", &PointSet::points)
        .def(py::self == py::self)
        .def("__hash__", [](PointSet s) { return s.bits(); })
        .def("__repr__", &PointSet::to_string);

    m.def("canonical_less", &canonical_less, py::arg("a"), py::arg("b"),
          "cardinality first, then the smallest differing point decides");
    m.def("compare_canonical", &compare_canonical, py::arg("a"), py::arg("b"));

    py::class_<FiniteSpace>(m, "FiniteSpace")
        .def_static("from_opens", &FiniteSpace::from_opens,
                    py::arg("point_count"), py::arg("opens"),
                    "validates closure under union and intersection")
        .def_static(
            "from_generators",
            [](int n, const std::vector<PointSet>& gens) {
                bool closed = false;
                FiniteSpace sp = FiniteSpace::from_generators(n, gens, &closed);
                return py::make_tuple(sp, closed);
            },
            py::arg("point_count"), py::arg("generators"),
            "closes the family; returns (space, was_already_closed)")
        .def_static("discrete", &FiniteSpace::discrete, py::arg("point_count"))
        .def_static("indiscrete", &FiniteSpace::indiscrete, py::arg("point_count"))
        .def_property_readonly("point_count", &FiniteSpace::point_count)
        .def_property_readonly("opens", &FiniteSpace::opens)
        .def_property_readonly("open_count", &FiniteSpace::open_count)
        .def("full", &FiniteSpace::full)
        .def("is_open", &FiniteSpace::is_open)
        .def("is_closed", &FiniteSpace::is_closed)
        .def("interior", &FiniteSpace::interior)
        .def("closure", &FiniteSpace::closure)
        .def("regular_part", &FiniteSpace::regular_part)
        .def("is_regular_open", &FiniteSpace::is_regular_open)
        .def("open_index", &FiniteSpace::open_index)
        .def(py::self == py::self)
        .def("__repr__", [](const FiniteSpace& sp) {
            return "FiniteSpace(points=" + std::to_string(sp.point_count()) +
                   ", opens=" + std::to_string(sp.open_count()) + ")";
        });

    m.def("enumerate_topologies", &enumerate_topologies, py::arg("n"),
          "all topologies on n points, n at most 4, canonically ordered");

    // ---- families ----

    py::enum_<FamilyRole>(m, "FamilyRole")
        .value("plain", FamilyRole::plain)
        .value("base", FamilyRole::base)
        .value("pi_base", FamilyRole::pi_base)
        .value("cover", FamilyRole::cover);

    py::class_<SetFamily>(m, "SetFamily")
        .def(py::init<FiniteSpace, std::vector<PointSet>, FamilyRole>(),
             py::arg("space"), py::arg("members"), py::arg("role") = FamilyRole::plain,
             "role invariants are validated at construction")
        .def_property_readonly("space", &SetFamily::space)
        .def_property_readonly("role", &SetFamily::role)
        .def_property_readonly("members", &SetFamily::members)
        .def("__len__", &SetFamily::size)
        .def("member", &SetFamily::member, py::arg("i"))
        .def("__getitem__", &SetFamily::member)
        .def("index_of", &SetFamily::index_of)
        .def("union_of_members", &SetFamily::union_of_members)
        .def(py::self == py::self)
        .def("__repr__", [](const SetFamily& f) {
            return std::string("SetFamily(role=") + role_name(f.role()) +
                   ", size=" + std::to_string(f.size()) + ")";
        });

    m.def("family_role_check", &family_role_check, py::arg("family"), py::arg("role"));
    m.def("star", &star, py::arg("space"), py::arg("x"), py::arg("cover"));
    m.def("maximal_subfamily", &maximal_subfamily, py::arg("family"));
    m.def("is_point_finite", &is_point_finite, py::arg("family"));
    m.def("is_refinement", &is_refinement, py::arg("fine"), py::arg("coarse"));
    m.def("ro_family", &ro_family, py::arg("space"),
          "the regular open algebra, canonically ordered");
    m.def("minimal_pi_base", &minimal_pi_base, py::arg("space"));
    m.def("topology_as_base", &topology_as_base, py::arg("space"));
    m.def("nonempty_opens_pi_base", &nonempty_opens_pi_base, py::arg("space"));

    py::class_<MultiplicityReport>(m, "MultiplicityReport")
        .def_readonly("max_multiplicity", &MultiplicityReport::max_multiplicity)
        .def_readonly("at_point", &MultiplicityReport::at_point);
    m.def("max_multiplicity", &max_multiplicity, py::arg("family"));

    py::class_<CoverSequence>(m, "CoverSequence")
        .def(py::init<FiniteSpace, std::vector<SetFamily>>(),
             py::arg("space"), py::arg("covers"))
        .def_property_readonly("space", &CoverSequence::space)
        .def_property_readonly("covers", &CoverSequence::covers)
        .def("__len__", &CoverSequence::size);
    m.def("is_development", &is_development, py::arg("space"), py::arg("seq"),
          "every point's star shrinks below every neighborhood along the sequence");

    // ---- maps ----

    py::class_<SpaceMap>(m, "SpaceMap")
        .def(py::init<FiniteSpace, FiniteSpace, std::vector<Point>>(),
             py::arg("source"), py::arg("target"), py::arg("image"))
        .def_static("identity", &SpaceMap::identity, py::arg("space"))
        .def_property_readonly("source", &SpaceMap::source)
        .def_property_readonly("target", &SpaceMap::target)
        .def_property_readonly("image", &SpaceMap::image)
        .def("apply", &SpaceMap::apply, py::arg("x"))
        .def("__call__", &SpaceMap::apply)
        .def("image_of", &SpaceMap::image_of)
        .def("preimage_of", &SpaceMap::preimage_of)
        .def("fiber", &SpaceMap::fiber, py::arg("y"))
        .def(py::self == py::self);

    py::class_<MapReport>(m, "MapReport")
        .def_readonly("onto", &MapReport::onto)
        .def_readonly("continuous", &MapReport::continuous)
        .def_readonly("closed_map", &MapReport::closed_map)
        .def_readonly("open_map", &MapReport::open_map)
        .def_readonly("skeletal", &MapReport::skeletal)
        .def_readonly("d_open", &MapReport::d_open)
        .def_readonly("irreducible", &MapReport::irreducible);
    m.def("map_report", &map_report, py::arg("f"));
    m.def("small_image", &small_image, py::arg("f"), py::arg("u"),
          "the target points whose whole fiber sits inside u");
    m.def("kpv_condition", &kpv_condition, py::arg("f"), py::arg("base_y"));

    // ---- witnesses ----

    py::class_<WitnessVerdict>(m, "WitnessVerdict")
        .def_readonly("ok", &WitnessVerdict::ok)
        .def_readonly("counterexample", &WitnessVerdict::counterexample)
        .def("__bool__", [](const WitnessVerdict& v) { return v.ok; });

    py::class_<FnsWitness>(m, "FnsWitness")
        .def(py::init<SetFamily, std::vector<std::vector<int>>>(),
             py::arg("family"), py::arg("s"))
        .def_readonly("family", &FnsWitness::family)
        .def_readonly("s", &FnsWitness::s);
    m.def("trivial_fns", &trivial_fns, py::arg("family"),
          "s(U) = the whole family; always verifies");
    m.def("verify_fns", &verify_fns, py::arg("w"));

    py::class_<FnsSearchResult>(m, "FnsSearchResult")
        .def_readonly("k_min", &FnsSearchResult::k_min)
        .def_readonly("witness", &FnsSearchResult::witness);
    m.def("search_fns", &search_fns, py::arg("family"), py::arg("k_max"),
          "smallest uniform image bound admitting a witness, or None");

    py::class_<FnWitness>(m, "FnWitness")
        .def(py::init<SetFamily, std::vector<std::vector<int>>, std::vector<std::vector<int>>>(),
             py::arg("base"), py::arg("u"), py::arg("l"))
        .def_readonly("base", &FnWitness::base)
        .def_readonly("u", &FnWitness::u)
        .def_readonly("l", &FnWitness::l);
    m.def("verify_fn", &verify_fn, py::arg("w"));

    py::class_<DevelopableFn>(m, "DevelopableFn")
        .def_readonly("base", &DevelopableFn::base)
        .def_readonly("min_level", &DevelopableFn::min_level)
        .def_readonly("witness", &DevelopableFn::witness);
    m.def("developable_fn", &developable_fn, py::arg("space"), py::arg("seq"),
          "the up/down operator pair built from a refining point-finite development");

    py::class_<StoneLift>(m, "StoneLift")
        .def_readonly("atoms", &StoneLift::atoms)
        .def_readonly("stone_space", &StoneLift::stone_space)
        .def_readonly("stone_base", &StoneLift::stone_base)
        .def_readonly("lifted", &StoneLift::lifted);
    m.def("stone_lift", &stone_lift, py::arg("space"), py::arg("s_ro"),
          "the witness carried onto the atoms of the regular open algebra");
    m.def("project_fn_to_ro", &project_fn_to_ro, py::arg("space"), py::arg("w"));

    // ---- quotients ----

    py::class_<Partition>(m, "Partition")
        .def_readonly("space", &Partition::space)
        .def_readonly("class_of", &Partition::class_of)
        .def_readonly("classes", &Partition::classes);
    m.def("partition", &partition, py::arg("space"), py::arg("p"),
          "equivalence classes of equal membership pattern across p");

    py::class_<QuotientResult>(m, "QuotientResult")
        .def_readonly("quotient", &QuotientResult::quotient)
        .def_readonly("q", &QuotientResult::q)
        .def_readonly("base_image", &QuotientResult::base_image);
    m.def("build_quotient", &build_quotient, py::arg("space"), py::arg("p"));

    py::class_<WcrPointCert>(m, "WcrPointCert")
        .def_readonly("x", &WcrPointCert::x)
        .def_readonly("a", &WcrPointCert::a)
        .def_readonly("b", &WcrPointCert::b);
    py::class_<WcrTupleCert>(m, "WcrTupleCert")
        .def_readonly("intersection", &WcrTupleCert::intersection)
        .def_readonly("tuple", &WcrTupleCert::tuple)
        .def_readonly("points", &WcrTupleCert::points);
    py::class_<WcrCertificate>(m, "WcrCertificate")
        .def_readonly("tuples", &WcrCertificate::tuples);
    py::class_<WcrFailure>(m, "WcrFailure")
        .def_readonly("intersection", &WcrFailure::intersection)
        .def_readonly("tuple", &WcrFailure::tuple)
        .def_readonly("at_point", &WcrFailure::at_point);
    py::class_<WcrResult>(m, "WcrResult")
        .def_readonly("ok", &WcrResult::ok)
        .def_readonly("certificate", &WcrResult::certificate)
        .def_readonly("failure", &WcrResult::failure)
        .def("__bool__", [](const WcrResult& r) { return r.ok; });
    m.def("is_wcr", &is_wcr, py::arg("space"), py::arg("p"), py::arg("k_cap"),
          py::arg("strict_empty") = false,
          "weak complete regularity over member tuples up to k_cap, with certificate");
    m.def("wcr_certificate_valid", &wcr_certificate_valid,
          py::arg("space"), py::arg("p"), py::arg("cert"));
    m.def("is_cr_family", &is_cr_family, py::arg("space"), py::arg("p"));

    py::class_<SeparationReport>(m, "SeparationReport")
        .def_readonly("t0", &SeparationReport::t0)
        .def_readonly("t1", &SeparationReport::t1)
        .def_readonly("t2", &SeparationReport::t2)
        .def_readonly("regular", &SeparationReport::regular);
    m.def("separation_report", &separation_report, py::arg("space"));

    // ---- the open-open game ----

    py::class_<Round>(m, "Round")
        .def(py::init<SetFamily, SetFamily>(), py::arg("c"), py::arg("d"))
        .def_readonly("c", &Round::c)
        .def_readonly("d", &Round::d);
    py::class_<GameTranscript>(m, "GameTranscript")
        .def_readonly("space", &GameTranscript::space)
        .def_readonly("rounds", &GameTranscript::rounds)
        .def_readonly("dense", &GameTranscript::dense);
    m.def("round_legal", &round_legal, py::arg("r"));
    m.def("covered_points", &covered_points, py::arg("t"));

    py::class_<PlayerOneStrategy>(m, "PlayerOneStrategy")
        .def_property_readonly("space", &PlayerOneStrategy::space)
        .def("opening", &PlayerOneStrategy::opening)
        .def("next", &PlayerOneStrategy::next, py::arg("history"));
    py::class_<SigmaStrategy, PlayerOneStrategy>(m, "SigmaStrategy")
        .def(py::init<SetFamily, FnsWitness>(), py::arg("base"), py::arg("witness"),
             "player I induced by a verified separation witness")
        .def_property_readonly("base", &SigmaStrategy::base);
    py::class_<ConstantStrategy, PlayerOneStrategy>(m, "ConstantStrategy")
        .def(py::init<SetFamily>(), py::arg("challenge"));

    py::enum_<AdversaryKind>(m, "AdversaryKind")
        .value("first_fit", AdversaryKind::first_fit)
        .value("max_avoider", AdversaryKind::max_avoider)
        .value("repeater", AdversaryKind::repeater)
        .value("scripted", AdversaryKind::scripted);
    py::class_<PlayerTwoStrategy>(m, "PlayerTwoStrategy")
        .def("reply", &PlayerTwoStrategy::reply, py::arg("history"), py::arg("c"));
    m.def("make_adversary", &make_adversary, py::arg("kind"), py::arg("base"),
          py::arg("script") = std::vector<SetFamily>{});

    m.def("play", &play, py::arg("space"), py::arg("base"), py::arg("one"),
          py::arg("two"), py::arg("horizon"),
          "alternate the strategies until dense or the horizon runs out");

    py::class_<WinResult>(m, "WinResult")
        .def_readonly("wins_all", &WinResult::wins_all)
        .def_readonly("worst_line", &WinResult::worst_line)
        .def_readonly("max_rounds", &WinResult::max_rounds)
        .def_readonly("nodes_visited", &WinResult::nodes_visited)
        .def("__bool__", [](const WinResult& r) { return r.wins_all; });
    m.def("exhaustive_win", &exhaustive_win, py::arg("space"), py::arg("base"),
          py::arg("one"), py::arg("horizon"), py::arg("node_budget") = 2'000'000,
          py::call_guard<py::gil_scoped_release>(),
          "player I wins every base-member reply line within the horizon");

    // ---- witness transfer ----

    py::class_<AbsoluteTriple>(m, "AbsoluteTriple")
        .def(py::init<FiniteSpace, SpaceMap, SpaceMap>(),
             py::arg("z"), py::arg("f"), py::arg("g"),
             "both maps must be irreducible onto maps out of z")
        .def_readonly("z", &AbsoluteTriple::z)
        .def_readonly("f", &AbsoluteTriple::f)
        .def_readonly("g", &AbsoluteTriple::g);
    m.def("pullback_pi_base", &pullback_pi_base, py::arg("f"), py::arg("base_x"));

    py::class_<TransferResult>(m, "TransferResult")
        .def_readonly("family_y", &TransferResult::family_y)
        .def_readonly("s_z", &TransferResult::s_z)
        .def_readonly("image_index", &TransferResult::image_index);
    m.def("transfer_witness", &transfer_witness, py::arg("t"), py::arg("base_x"),
          py::arg("s"), "push a witness through the triple onto the other side");

    py::class_<LemmaFailure>(m, "LemmaFailure")
        .def_readonly("lemma", &LemmaFailure::lemma)
        .def_readonly("map", &LemmaFailure::map)
        .def_readonly("u", &LemmaFailure::u)
        .def_readonly("v", &LemmaFailure::v);
    py::class_<LemmaReport>(m, "LemmaReport")
        .def_readonly("instances_checked", &LemmaReport::instances_checked)
        .def_readonly("failures", &LemmaReport::failures)
        .def_readonly("expected_failures_found", &LemmaReport::expected_failures_found);
    m.def("check_lemma_pair", &check_lemma_pair, py::arg("src"), py::arg("tgt"));
    m.def("lemma_harness", &lemma_harness, py::arg("max_points"),
          py::arg("sample_pairs") = 250, py::arg("seed") = 1,
          py::call_guard<py::gil_scoped_release>());

    // ---- generators ----

    py::enum_<GenKind>(m, "GenKind")
        .value("discrete", GenKind::discrete)
        .value("indiscrete", GenKind::indiscrete)
        .value("sierpinski", GenKind::sierpinski)
        .value("alexandrov", GenKind::alexandrov)
        .value("random_space", GenKind::random_space)
        .value("cluster", GenKind::cluster);

    py::class_<GenSpec>(m, "GenSpec")
        .def(py::init([](GenKind kind, int n, double density, std::uint64_t seed,
                         std::vector<std::pair<int, int>> poset_edges,
                         std::vector<PointSet> blocks) {
                 GenSpec s;
                 s.kind = kind;
                 s.n = n;
                 s.density = density;
                 s.seed = seed;
                 s.poset_edges = std::move(poset_edges);
                 s.blocks = std::move(blocks);
                 return s;
             }),
             py::arg("kind") = GenKind::discrete, py::arg("n") = 1,
             py::arg("density") = 0.5, py::arg("seed") = 0,
             py::arg("poset_edges") = std::vector<std::pair<int, int>>{},
             py::arg("blocks") = std::vector<PointSet>{})
        .def_readwrite("kind", &GenSpec::kind)
        .def_readwrite("n", &GenSpec::n)
        .def_readwrite("density", &GenSpec::density)
        .def_readwrite("seed", &GenSpec::seed)
        .def_readwrite("poset_edges", &GenSpec::poset_edges)
        .def_readwrite("blocks", &GenSpec::blocks);
    m.def("generate", &generate, py::arg("spec"),
          "deterministic space construction from a generator spec");

    // ---- documents ----

    py::enum_<ParseMode>(m, "ParseMode")
        .value("strict", ParseMode::strict)
        .value("lax", ParseMode::lax);

    m.def("fnv1a64", [](const std::string& data) { return fnv1a64(data); }, py::arg("data"));
    m.def("space_hash", &space_hash, py::arg("space"),
          "16 hex digits over the canonical open-set payload");

    py::class_<SpaceDoc>(m, "SpaceDoc")
        .def_readonly("space", &SpaceDoc::space)
        .def_readonly("name", &SpaceDoc::name)
        .def_readonly("auto_closed", &SpaceDoc::auto_closed)
        .def_readonly("unknown_lines", &SpaceDoc::unknown_lines);

    m.def("save_space", &save_space, py::arg("space"),
          py::arg("name") = std::nullopt,
          py::arg("unknown_lines") = std::vector<std::string>{});
    m.def("load_space", &load_space, py::arg("text"),
          py::arg("mode") = ParseMode::strict, py::arg("auto_close") = false);
    m.def("save_family", &save_family, py::arg("family"));
    m.def("load_family", &load_family, py::arg("text"), py::arg("space"),
          py::arg("mode") = ParseMode::strict);
    m.def("save_fns", &save_fns, py::arg("w"));
    m.def("load_fns", &load_fns, py::arg("text"), py::arg("space"),
          py::arg("mode") = ParseMode::strict);
    m.def("save_fn", &save_fn, py::arg("w"));
    m.def("load_fn", &load_fn, py::arg("text"), py::arg("space"),
          py::arg("mode") = ParseMode::strict);
    m.def("save_transcript", &save_transcript, py::arg("t"));
    m.def("load_transcript", &load_transcript, py::arg("text"), py::arg("space"),
          py::arg("mode") = ParseMode::strict);
    m.def("save_triple", &save_triple, py::arg("t"));
    m.def("load_triple", &load_triple, py::arg("text"),
          py::arg("mode") = ParseMode::strict);

    py::class_<ReportDoc>(m, "ReportDoc")
        .def(py::init<>())
        .def_readwrite("kind", &ReportDoc::kind)
        .def_readwrite("fields", &ReportDoc::fields)
        .def_readwrite("findings", &ReportDoc::findings)
        .def("field", [](const ReportDoc& r, const std::string& key) -> py::object {
            for (const auto& [k, v] : r.fields)
                if (k == key) return py::cast(v);
            return py::none();
        }, py::arg("key"));
    m.def("save_report", &save_report, py::arg("r"));
    m.def("load_report", &load_report, py::arg("text"),
          py::arg("mode") = ParseMode::strict);

    m.def("read_file", &read_file, py::arg("path"));
    m.def("write_file", &write_file, py::arg("path"), py::arg("text"));

    // ---- sweeps ----

    m.def("sweep_witness", &sweep_witness, py::arg("max_points"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("sweep_quotient", &sweep_quotient, py::arg("max_points"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("sweep_game", &sweep_game, py::arg("max_points"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("sweep_lemmas", &sweep_lemmas, py::arg("max_points"), py::arg("workers") = 1,
          py::call_guard<py::gil_scoped_release>());
}
