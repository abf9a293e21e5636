import itertools

import pytest
from hypothesis import given, settings, strategies as st
from sympy import ZZ_I

from graphs.generators import complete_graph, cycle_graph
from graphs.operations import verify_proper_colouring
from utils.enums import Backend
from utils.errors import DatasetError, GraphError, RepresentationError
from vectors.constructions import dim2_sign_vectors, \
    fourth_roots_dim4_graph, hadamard_graph, hadamard_vectors, \
    roots_of_unity_colouring, roots_of_unity_graph, standard_basis, \
    sylvester_hadamard_rows
from vectors.datasets import dim4_colouring, g18_dataset, read_dataset
from vectors.io import load_rep, rep_from_dict, rep_to_dict
from vectors.representation import VectorRep, check_representation, \
    inner_product, orthogonality_graph, proportional


class TestVectorRep:

    def test_validation(self):
        with pytest.raises(RepresentationError):
            VectorRep(2, Backend.INTEGER, ((1, 0), (0, 0)))
        with pytest.raises(RepresentationError):
            VectorRep(2, Backend.INTEGER, ((1, 0, 0),))
        with pytest.raises(RepresentationError):
            VectorRep(2, Backend.INTEGER, ())
        with pytest.raises(RepresentationError):
            VectorRep(2, Backend.INTEGER, ((1.5, 0),))
        with pytest.raises(RepresentationError):
            VectorRep(2, Backend.COMPLEX_FLOAT, ((float('nan'), 0),))
        with pytest.raises(RepresentationError):
            VectorRep(2, Backend.ROOT_EXPONENT, ((0, 1),))
        with pytest.raises(RepresentationError):
            VectorRep(2, Backend.GAUSSIAN, (((0.5, 0), (1, 0)),))
        with pytest.raises(RepresentationError):
            VectorRep(2, Backend.GAUSSIAN, ((0.5 + 1j, 1),))
        with pytest.raises(RepresentationError):
            VectorRep(2, Backend.ROOT_EXPONENT, ((0.5, 1),), order=3)
        rep = VectorRep(2, Backend.GAUSSIAN, (((2.0, 0), 1j),))
        assert rep[0] == (ZZ_I(2, 0), ZZ_I(0, 1))

    def test_backend_from_string(self):
        rep = VectorRep(2, 'gauss', (((1, 0), (0, 1)),))
        assert rep.backend is Backend.GAUSSIAN
        assert rep[0] == (ZZ_I(1, 0), ZZ_I(0, 1))
        assert not rep.is_real
        assert rep.has_unit_modulus()

    def test_root_exponents_reduce(self):
        rep = VectorRep(3, Backend.ROOT_EXPONENT, ((0, 4, -1),), order=3)
        assert rep[0] == (0, 1, 2)


class TestInnerProduct:

    def test_integer(self):
        rep = VectorRep(2, Backend.INTEGER, ((1, 1), (1, -1), (2, 0)))
        assert inner_product(rep, 0, 1).is_zero()
        assert inner_product(rep, 0, 2).value == 2

    def test_gaussian_conjugates_first_argument(self):
        rep = VectorRep(1, Backend.GAUSSIAN, (((0, 1),), ((1, 0),)))
        assert inner_product(rep, 0, 1).to_complex() == -1j
        assert inner_product(rep, 1, 0).to_complex() == 1j

    def test_root_exponent_composite_order(self):
        rep = VectorRep(4, Backend.ROOT_EXPONENT,
                        ((0, 0, 0, 0), (0, 1, 2, 3), (0, 2, 0, 2),
                         (0, 1, 0, 1)), order=4)
        assert inner_product(rep, 0, 1).is_zero()
        assert inner_product(rep, 0, 2).is_zero()
        assert not inner_product(rep, 0, 3).is_zero()
        assert inner_product(rep, 0, 3).modulus() == \
            pytest.approx(2 * 2 ** 0.5)

    def test_float_tolerance(self):
        rep = VectorRep(2, Backend.COMPLEX_FLOAT,
                        ((1, 0), (0, 1), (1e-12, 1)))
        assert orthogonality_graph(rep).edges == ((0, 1), (0, 2))
        assert orthogonality_graph(rep, tol=1e-15).edges == ((0, 1),)


def _translation(p, a):
    """Vertex map x -> x + a of the roots-of-unity graph"""
    image = []
    for x in itertools.product(range(p), repeat=p):
        index = 0
        for e, s in zip(x, a):
            index = index * p + (e + s) % p
        image.append(index)
    return image


def _is_automorphism(graph, image):
    return all(graph.has_edge(image[u], image[v]) for u, v in graph.edges)


class TestOrthogonalityGraph:

    roots3, _ = roots_of_unity_graph(3)
    roots5, _ = roots_of_unity_graph(5)

    def test_dim2(self):
        graph, _ = dim2_sign_vectors()
        assert graph.edges == ((0, 1), (0, 2), (1, 3), (2, 3))

    def test_hadamard(self):
        assert orthogonality_graph(hadamard_vectors(4)) == hadamard_graph(4)
        graph = hadamard_graph(4)
        assert graph.n == 16
        assert graph.edge_count == 48

    def test_hadamard_guards(self):
        with pytest.raises(GraphError):
            hadamard_graph(3)
        with pytest.raises(GraphError):
            hadamard_graph(22)

    def test_sylvester_rows_are_a_clique(self):
        graph = hadamard_graph(8)
        rows = sylvester_hadamard_rows(8)
        assert all(graph.has_edge(u, v) for u in rows for v in rows
                   if u != v)
        with pytest.raises(GraphError):
            sylvester_hadamard_rows(6)

    def test_roots_of_unity(self):
        graph, rep = roots_of_unity_graph(3)
        assert graph.n == 27
        assert graph.degrees() == [6] * 27
        assert orthogonality_graph(rep) == graph
        assert check_representation(graph, rep).passed
        assert verify_proper_colouring(graph,
                                       roots_of_unity_colouring(3)).passed
        with pytest.raises(GraphError):
            roots_of_unity_graph(4)
        with pytest.raises(GraphError):
            roots_of_unity_graph(7)

    def test_dim4(self):
        graph, rep = fourth_roots_dim4_graph()
        assert graph.n == 64
        orthogonal = sum(inner_product(rep, x, y).is_zero() for x, y in
                         itertools.combinations(range(graph.n), 2))
        assert graph.edge_count == orthogonal
        assert len(set(graph.degrees())) == 1
        assert rep[16 * 1 + 4 * 2 + 3] == (ZZ_I(1, 0), ZZ_I(0, 1),
                                           ZZ_I(-1, 0), ZZ_I(0, -1))
        report = verify_proper_colouring(graph, dim4_colouring())
        assert report.passed

    def test_translations_are_automorphisms(self):
        for a in itertools.product(range(3), repeat=3):
            assert _is_automorphism(self.roots3, _translation(3, a))

    @settings(max_examples=5, derandomize=True, deadline=None)
    @given(st.tuples(*[st.integers(0, 4)] * 5))
    def test_translations_are_automorphisms_p5(self, a):
        assert _is_automorphism(self.roots5, _translation(5, a))

    def test_proportional_vectors_share_neighbourhoods(self):
        rep = VectorRep(2, Backend.GAUSSIAN, ((1, 1j), (1j, -1), (1, -1j),
                                              (1, 1), (1, -1), (-1, 1)))
        graph = orthogonality_graph(rep)
        pairs = [(x, y) for x, y in itertools.combinations(range(len(rep)), 2)
                 if proportional(rep, x, y)]
        assert pairs == [(0, 1), (4, 5)]
        for x, y in pairs:
            assert not graph.has_edge(x, y)
            assert graph.neighbours(x) == graph.neighbours(y)
        _, signs = dim2_sign_vectors()
        graph = orthogonality_graph(signs)
        assert proportional(signs, 0, 3)
        assert graph.neighbours(0) == graph.neighbours(3)


class TestCheckRepresentation:

    def test_g18(self):
        graph, rep = g18_dataset()
        assert graph.n == 18
        assert graph.edge_count == 44
        assert rep.is_real
        report = check_representation(graph, rep)
        assert report.passed
        assert report.worst_residual == 0.0

    def test_violation(self):
        rep = VectorRep(3, Backend.INTEGER, ((1, 0, 0), (1, 1, 0),
                                             (0, 0, 1)))
        report = check_representation(complete_graph(3), rep)
        assert not report.passed
        assert [v.where for v in report.violations] == [(0, 1)]
        assert report.violations[0].residual == 1.0

    def test_basis(self):
        assert check_representation(complete_graph(3),
                                    standard_basis(3)).passed
        with pytest.raises(RepresentationError):
            check_representation(cycle_graph(4), standard_basis(3))

    def test_proportional(self):
        rep = VectorRep(2, Backend.INTEGER, ((1, 1), (-2, -2), (1, 0)))
        assert proportional(rep, 0, 1)
        assert not proportional(rep, 0, 2)


class TestIO:

    def test_json(self):
        _, rep = fourth_roots_dim4_graph()
        data = rep_to_dict(rep)
        assert data['backend'] == 'gauss'
        assert data['vectors'][1] == [[1, 0], [1, 0], [1, 0], [0, 1]]
        assert rep_from_dict(data) == rep

    def test_malformed(self):
        with pytest.raises(RepresentationError):
            load_rep('{"dim": 2, "backend": "quaternion", "vectors": []}')
        with pytest.raises(RepresentationError):
            load_rep('{"dim": 2, "vectors": [[1, 0]]}')


class TestDatasets:

    def test_missing(self):
        with pytest.raises(DatasetError):
            read_dataset('no_such_dataset.txt')

    def test_dim4_colouring(self):
        colouring = dim4_colouring()
        assert colouring.c == 4
        assert len(colouring) == 64
        assert colouring.used == 4


if __name__ == '__main__':
    pytest.main()
