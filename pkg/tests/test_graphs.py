import pytest

from coverpebble import (
    DisconnectedGraph,
    Fuse,
    InvalidEdge,
    InvalidSpec,
    Multipartite,
    ParseError,
    Path,
    Star,
    Wheel,
    build_graph,
    eccentricity_profile,
    format_graph_text,
    generate,
    parse_graph_text,
)


def test_build_single_edge():
    g = build_graph(2, [(0, 1)])
    assert g.diam == 1
    assert g.edges == ((0, 1),)
    assert g.adj == ((1,), (0,))


def test_build_path_distances():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.dist[0][2] == 2
    assert g.dist[2][0] == 2
    assert g.diam == 2


def test_build_rejects_disconnected():
    with pytest.raises(DisconnectedGraph):
        build_graph(4, [(0, 1), (2, 3)])


def test_build_rejects_bad_edges():
    with pytest.raises(InvalidEdge):
        build_graph(3, [(0, 3)])
    with pytest.raises(InvalidEdge):
        build_graph(3, [(1, 1)])
    with pytest.raises(InvalidEdge):
        build_graph(0, [])


def test_build_deduplicates_and_normalizes():
    g = build_graph(2, [(0, 1), (1, 0), (0, 1)])
    assert g.edges == ((0, 1),)


def test_dist_table_shape():
    for g in [generate(Wheel(4)), generate(Fuse(6, 3)), generate(Multipartite((2, 2, 1)))]:
        for u in range(g.n):
            assert g.dist[u][u] == 0
            for v in range(g.n):
                assert g.dist[u][v] == g.dist[v][u]
                assert (g.dist[u][v] == 1) == ((min(u, v), max(u, v)) in g.edges)
                for w in range(g.n):
                    assert g.dist[u][w] <= g.dist[u][v] + g.dist[v][w]
        assert g.diam == max(max(row) for row in g.dist)


def test_generate_multipartite_k22():
    g = generate(Multipartite((2, 2)))
    assert g.n == 4
    assert len(g.edges) == 4
    assert g.edges == ((0, 2), (0, 3), (1, 2), (1, 3))


def test_generate_wheel3_is_complete():
    g = generate(Wheel(3))
    assert g.n == 4
    assert len(g.edges) == 6
    assert g.diam == 1


def test_generate_fuse74():
    g = generate(Fuse(7, 4))
    assert g.n == 7
    assert len(g.edges) == 6
    assert g.diam == 4
    # free path end at 0, star center at 3, spokes 4..6
    assert g.adj[0] == (1,)
    assert g.adj[3] == (2, 4, 5, 6)


def test_generate_path_and_star_delegate():
    p4 = generate(Path(4))
    assert p4.edges == ((0, 1), (1, 2), (2, 3))
    assert generate(Path(1)).n == 1
    s3 = generate(Star(3))
    assert s3.edges == ((0, 3), (1, 3), (2, 3))
    assert s3.n == 4


def test_generate_rejects_bad_specs():
    with pytest.raises(InvalidSpec):
        generate(Multipartite((1, 2)))
    with pytest.raises(InvalidSpec):
        generate(Multipartite(()))
    with pytest.raises(InvalidSpec):
        generate(Multipartite((2, 0)))
    with pytest.raises(InvalidSpec):
        generate(Wheel(2))
    with pytest.raises(InvalidSpec):
        generate(Fuse(5, 5))
    with pytest.raises(InvalidSpec):
        generate(Fuse(5, 0))
    with pytest.raises(InvalidSpec):
        generate(Path(0))
    with pytest.raises(InvalidSpec):
        generate(Star(0))


def test_multipartite_diameter_rule():
    for sizes in [(2, 2), (3, 1), (2, 1, 1), (4, 3, 2)]:
        assert generate(Multipartite(sizes)).diam == 2
    for r in range(2, 5):
        assert generate(Multipartite((1,) * r)).diam == 1
    assert generate(Multipartite((1,))).diam == 0


def test_wheel_diameter_rule():
    assert generate(Wheel(3)).diam == 1
    for n in range(4, 9):
        assert generate(Wheel(n)).diam == 2


def test_fuse_order_and_diameter():
    # a single-edge stem with several spokes is a star whose two spokes
    # sit at distance 2, so the diameter exceeds d there
    for n in range(2, 13):
        for d in range(1, n):
            g = generate(Fuse(n, d))
            assert g.n == n
            assert len(g.edges) == n - 1
            expected = d if (d >= 2 or n - d < 2) else 2
            assert g.diam == expected, (n, d)


def test_generate_is_deterministic():
    specs = [Multipartite((3, 2, 1)), Wheel(5), Fuse(7, 4), Path(6), Star(4)]
    for spec in specs:
        assert generate(spec) == generate(spec)


def test_eccentricity_profile_examples():
    w3 = generate(Wheel(3))
    assert eccentricity_profile(w3) == [(0, 1), (1, 1), (2, 1), (3, 1)]
    p3 = generate(Path(3))
    assert eccentricity_profile(p3) == [(0, 2), (1, 1), (2, 2)]
    f = generate(Fuse(7, 4))
    profile = dict(eccentricity_profile(f))
    assert profile[0] == 4
    assert max(profile.values()) == f.diam


def test_graph_text_round_trip():
    for spec in [Multipartite((2, 2)), Wheel(4), Fuse(6, 3), Path(5)]:
        g = generate(spec)
        again = parse_graph_text(format_graph_text(g))
        assert again == g


def test_graph_text_comments_and_blanks():
    text = "# a wheel\n\n4 4\n0 1\n0 2\n# middle comment\n0 3\n1 2\n"
    g = parse_graph_text(text)
    assert g.n == 4
    assert len(g.edges) == 4


def test_graph_text_parse_errors():
    with pytest.raises(ParseError):
        parse_graph_text("")
    with pytest.raises(ParseError):
        parse_graph_text("2\n0 1\n")
    with pytest.raises(ParseError):
        parse_graph_text("2 2\n0 1\n")
    with pytest.raises(ParseError):
        parse_graph_text("2 1\n0 x\n")
    err = None
    try:
        parse_graph_text("# head\n2 1\n0 1 9\n")
    except ParseError as exc:
        err = exc
    assert err is not None and err.line == 3
