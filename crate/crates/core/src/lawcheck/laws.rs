//! The law suites for 𝒢 and CP(Rel).

use num_bigint::BigUint;

use crate::census::{count_states, enumerate_positive_relations, enumerate_state_graphs, DEFAULT_BRUTE_FORCE_BOUND};
use crate::functors::{functor_c, preservation_check, roundtrip_check_with};
use crate::graphcat::{
    coherence_graph, embed_graph, graph_cap, graph_compose, graph_cup, graph_dagger, graph_identity, graph_join,
    graph_leq, graph_symmetry, graph_tensor, is_pure, Graph, State,
};
use crate::lawcheck::report::{instance_of, LawReport};
use crate::lawcheck::runner::{expect_equal, Catalogue, CheckConfig, Run};
use crate::relcore::{
    cp_compose, cp_dagger, cp_tensor, embed_double, is_cp, product_set, CpMorphism, Element, FiniteSet, Relabelling,
    Relation,
};

fn err(e: crate::Error) -> String {
    e.to_string()
}

fn compose(g2: &Graph, g1: &Graph) -> Result<Graph, String> {
    graph_compose(g2, g1).map_err(err)
}

fn join2(a: &Graph, b: &Graph) -> Result<Graph, String> {
    graph_join(a.dom(), a.cod(), [a, b]).map_err(err)
}

fn well_formed(what: &str, g: &Graph) -> Result<(), String> {
    if g.is_well_formed() {
        Ok(())
    } else {
        Err(format!("{what} is not a well-formed graph: {g:?}"))
    }
}

/// Canonical forms must agree: equality up to associators and unitors.
fn coherent(what: &str, lhs: &Graph, rhs: &Graph) -> Result<(), String> {
    expect_equal(what, &lhs.canonical().map_err(err)?, &rhs.canonical().map_err(err)?)
}

/// Identity and associativity of graph composition.
pub fn check_category_laws(cfg: &CheckConfig) -> LawReport {
    let cat: Catalogue<Graph> = Catalogue::new(cfg.size_bound);
    let ids: Vec<Graph> = cat.objects().iter().map(graph_identity).collect();
    let mut run = Run::new("category-laws", cfg);
    for a in cat.sizes() {
        for b in cat.sizes() {
            run.over([cat.pool(a, b)], |[g]| {
                expect_equal("1_B ∘ γ", &compose(&ids[b], g)?, g)?;
                expect_equal("γ ∘ 1_A", &compose(g, &ids[a])?, g)
            });
        }
    }
    for a in cat.sizes() {
        for b in cat.sizes() {
            for c in cat.sizes() {
                for d in cat.sizes() {
                    run.over([cat.pool(a, b), cat.pool(b, c), cat.pool(c, d)], |[f, g, h]| {
                        let gf = compose(g, f)?;
                        well_formed("g ∘ f", &gf)?;
                        expect_equal("h ∘ (g ∘ f) vs (h ∘ g) ∘ f", &compose(h, &gf)?, &compose(&compose(h, g)?, f)?)
                    });
                }
            }
        }
    }
    run.finish()
}

/// `C ∘ G = id`, `G ∘ C = id`, and preservation of composition.
pub fn check_iso(cfg: &CheckConfig) -> LawReport {
    roundtrip_check_with(cfg)
}

fn dagger_laws(cfg: &CheckConfig, cat: &Catalogue<Graph>) -> LawReport {
    let mut run = Run::new("dagger", cfg);
    for x in cat.objects() {
        let id = graph_identity(x);
        run.check(expect_equal("1†", &graph_dagger(&id), &id), || instance_of(&[&id]));
    }
    for a in cat.sizes() {
        for b in cat.sizes() {
            run.over([cat.pool(a, b)], |[g]| expect_equal("γ††", &graph_dagger(&graph_dagger(g)), g));
            for c in cat.sizes() {
                run.over([cat.pool(a, b), cat.pool(b, c)], |[f, g]| {
                    expect_equal(
                        "(g ∘ f)† vs f† ∘ g†",
                        &graph_dagger(&compose(g, f)?),
                        &compose(&graph_dagger(f), &graph_dagger(g))?,
                    )
                });
            }
            for c in cat.sizes() {
                for d in cat.sizes() {
                    run.over([cat.pool(a, b), cat.pool(c, d)], |[f, g]| {
                        expect_equal(
                            "(f ⊗ g)† vs f† ⊗ g†",
                            &graph_dagger(&graph_tensor(f, g)),
                            &graph_tensor(&graph_dagger(f), &graph_dagger(g)),
                        )
                    });
                }
            }
        }
    }
    run.finish()
}

fn symmetry_laws(cfg: &CheckConfig, cat: &Catalogue<Graph>) -> LawReport {
    let mut run = Run::new("symmetry", cfg);
    let wide = CheckConfig::objects(cfg.size_bound + 1);
    for x in &wide {
        for y in &wide {
            let twice = graph_compose(&graph_symmetry(y, x), &graph_symmetry(x, y)).map_err(err);
            let id = graph_identity(&product_set(x, y));
            run.check(twice.and_then(|t| expect_equal("σ ∘ σ", &t, &id)), || instance_of(&[&id]));
        }
    }
    let objs = cat.objects();
    for a in cat.sizes() {
        for b in cat.sizes() {
            for c in cat.sizes() {
                for d in cat.sizes() {
                    let before = graph_symmetry(&objs[a], &objs[b]);
                    let after = graph_symmetry(&objs[c], &objs[d]);
                    run.over([cat.pool(a, c), cat.pool(b, d)], |[f, g]| {
                        expect_equal(
                            "σ ∘ (f ⊗ g) vs (g ⊗ f) ∘ σ",
                            &compose(&after, &graph_tensor(f, g))?,
                            &compose(&graph_tensor(g, f), &before)?,
                        )
                    });
                }
            }
        }
    }
    run.finish()
}

fn tensor_laws(cfg: &CheckConfig, cat: &Catalogue<Graph>) -> LawReport {
    let mut run = Run::new("tensor", cfg);
    let objs = cat.objects();
    let unit_id = graph_identity(&FiniteSet::unit());
    for x in objs {
        for y in objs {
            let lhs = graph_tensor(&graph_identity(x), &graph_identity(y));
            run.check(expect_equal("1 ⊗ 1", &lhs, &graph_identity(&product_set(x, y))), || instance_of(&[&lhs]));
        }
    }
    for a in cat.sizes() {
        for b in cat.sizes() {
            run.over([cat.pool(a, b)], |[f]| {
                coherent("1_I ⊗ f", &graph_tensor(&unit_id, f), f)?;
                coherent("f ⊗ 1_I", &graph_tensor(f, &unit_id), f)
            });
        }
    }
    // interchange: (g1 ∘ f1) ⊗ (g2 ∘ f2) = (g1 ⊗ g2) ∘ (f1 ⊗ f2)
    for a in cat.sizes() {
        for b in cat.sizes() {
            for c in cat.sizes() {
                for a2 in cat.sizes() {
                    for b2 in cat.sizes() {
                        for c2 in cat.sizes() {
                            run.over(
                                [cat.pool(a, b), cat.pool(b, c), cat.pool(a2, b2), cat.pool(b2, c2)],
                                |[f1, g1, f2, g2]| {
                                    expect_equal(
                                        "(g1 ∘ f1) ⊗ (g2 ∘ f2) vs (g1 ⊗ g2) ∘ (f1 ⊗ f2)",
                                        &graph_tensor(&compose(g1, f1)?, &compose(g2, f2)?),
                                        &compose(&graph_tensor(g1, g2), &graph_tensor(f1, f2))?,
                                    )
                                },
                            );
                        }
                    }
                }
            }
        }
    }
    run.finish()
}

/// Coherence instances relabel three-fold tensors and are the costliest in
/// the suite, so they get this fraction of the exhaustive budget.
const COHERENCE_BUDGET_DIVISOR: u64 = 32;

fn tensor_associativity_laws(cfg: &CheckConfig, cat: &Catalogue<Graph>) -> LawReport {
    let cfg = CheckConfig { exhaustive_limit: cfg.exhaustive_limit / COHERENCE_BUDGET_DIVISOR, ..cfg.clone() };
    let mut run = Run::new("tensor-associativity", &cfg);
    let homs: Vec<(usize, usize)> = cat.sizes().flat_map(|a| cat.sizes().map(move |b| (a, b))).collect();
    for &(a, b) in &homs {
        for &(c, d) in &homs {
            for &(e, f) in &homs {
                run.over([cat.pool(a, b), cat.pool(c, d), cat.pool(e, f)], |[f, g, h]| {
                    coherent(
                        "(f ⊗ g) ⊗ h vs f ⊗ (g ⊗ h)",
                        &graph_tensor(&graph_tensor(f, g), h),
                        &graph_tensor(f, &graph_tensor(g, h)),
                    )
                });
            }
        }
    }
    run.finish()
}

/// `(ε ⊗ 1) ∘ α⁻¹ ∘ (1 ⊗ η) = 1` and its mirror image, with unitors and
/// associators as explicit coherence graphs.
fn snake_laws(cfg: &CheckConfig) -> LawReport {
    let cfg = CheckConfig::with_size_bound(cfg.size_bound + 1);
    let mut run = Run::new("snake", &cfg);
    for a in CheckConfig::objects(cfg.size_bound) {
        let id = graph_identity(&a);
        let cup = graph_cup(&a);
        let cap = graph_cap(&a);
        let left = compose_chain(&[
            coherence_graph(&Relabelling::right_unitor(&a).inverse()),
            graph_tensor(&id, &cup),
            coherence_graph(&Relabelling::associator(&a, &a, &a).inverse()),
            graph_tensor(&cap, &id),
            coherence_graph(&Relabelling::left_unitor(&a)),
        ]);
        run.check(
            left.and_then(|g| expect_equal("λ ∘ (cap ⊗ 1) ∘ α⁻¹ ∘ (1 ⊗ cup) ∘ ρ⁻¹", &g, &id)),
            || instance_of(&[&cup, &cap]),
        );
        let right = compose_chain(&[
            coherence_graph(&Relabelling::left_unitor(&a).inverse()),
            graph_tensor(&cup, &id),
            coherence_graph(&Relabelling::associator(&a, &a, &a)),
            graph_tensor(&id, &cap),
            coherence_graph(&Relabelling::right_unitor(&a)),
        ]);
        run.check(
            right.and_then(|g| expect_equal("ρ ∘ (1 ⊗ cap) ∘ α ∘ (cup ⊗ 1) ∘ λ⁻¹", &g, &id)),
            || instance_of(&[&cup, &cap]),
        );
        // the same equations through the canonicalising pass
        let canonical_left = compose_canonical(&graph_tensor(&id, &cup), &graph_tensor(&cap, &id));
        run.check(canonical_left.and_then(|g| coherent("canonical left snake", &g, &id)), || {
            instance_of(&[&cup, &cap])
        });
        run.check(expect_equal("cap vs cup†", &graph_cap(&a), &graph_dagger(&cup)), || instance_of(&[&cup]));
    }
    run.finish()
}

fn compose_chain(chain: &[Graph]) -> Result<Graph, String> {
    let mut acc = chain[0].clone();
    for g in &chain[1..] {
        acc = compose(g, &acc)?;
    }
    Ok(acc)
}

/// `second ∘ first` after flattening both, so bracketing and unit factors
/// no longer have to match on the nose.
fn compose_canonical(first: &Graph, second: &Graph) -> Result<Graph, String> {
    compose(&second.canonical().map_err(err)?, &first.canonical().map_err(err)?)
}

fn join_laws(cfg: &CheckConfig, cat: &Catalogue<Graph>) -> LawReport {
    let mut run = Run::new("join-enrichment", cfg);
    for a in cat.sizes() {
        for b in cat.sizes() {
            let pool = cat.pool(a, b);
            let bottom = Graph::empty(pool_dom(cat, a), pool_dom(cat, b));
            run.over([pool, pool], |[f, g]| {
                let both = graph_leq(f, g).map_err(err)? && graph_leq(g, f).map_err(err)?;
                if both && f != g {
                    return Err("≤ is not antisymmetric".to_string());
                }
                let j = join2(f, g)?;
                well_formed("f ∨ g", &j)?;
                expect_equal("(f ∨ g)†", &graph_dagger(&j), &join2(&graph_dagger(f), &graph_dagger(g))?)
            });
            run.over([pool, pool, pool], |[f, g, h]| {
                let upper = graph_leq(f, h).map_err(err)? && graph_leq(g, h).map_err(err)?;
                expect_equal("f, g ≤ h vs f ∨ g ≤ h", &upper, &graph_leq(&join2(f, g)?, h).map_err(err)?)
            });
            for c in cat.sizes() {
                let bottom_bc = Graph::empty(pool_dom(cat, b), pool_dom(cat, c));
                run.over([pool, cat.pool(b, c)], |[f, g]| {
                    expect_equal("g ∘ ⊥", &compose(g, &bottom)?, &Graph::empty(f.dom(), g.cod()))?;
                    expect_equal("⊥ ∘ f", &compose(&bottom_bc, f)?, &Graph::empty(f.dom(), g.cod()))
                });
                run.over([pool, pool, cat.pool(b, c)], |[f1, f2, g]| {
                    expect_equal(
                        "g ∘ (f1 ∨ f2)",
                        &compose(g, &join2(f1, f2)?)?,
                        &join2(&compose(g, f1)?, &compose(g, f2)?)?,
                    )
                });
                run.over([pool, cat.pool(b, c), cat.pool(b, c)], |[f, g1, g2]| {
                    expect_equal(
                        "(g1 ∨ g2) ∘ f",
                        &compose(&join2(g1, g2)?, f)?,
                        &join2(&compose(g1, f)?, &compose(g2, f)?)?,
                    )
                });
                for d in cat.sizes() {
                    run.over([pool, pool, cat.pool(c, d)], |[f1, f2, g]| {
                        expect_equal(
                            "(f1 ∨ f2) ⊗ g",
                            &graph_tensor(&join2(f1, f2)?, g),
                            &join2(&graph_tensor(f1, g), &graph_tensor(f2, g))?,
                        )?;
                        expect_equal(
                            "g ⊗ (f1 ∨ f2)",
                            &graph_tensor(g, &join2(f1, f2)?),
                            &join2(&graph_tensor(g, f1), &graph_tensor(g, f2))?,
                        )?;
                        expect_equal(
                            "⊥ ⊗ g",
                            &graph_tensor(&bottom, g),
                            &Graph::empty(&product_set(f1.dom(), g.dom()), &product_set(f1.cod(), g.cod())),
                        )
                    });
                }
            }
        }
    }
    run.finish()
}

fn pool_dom(cat: &Catalogue<Graph>, k: usize) -> &FiniteSet {
    &cat.objects()[k]
}

/// The sub-laws of the enriched †-compact structure, one report each.
pub fn enriched_compact_reports(cfg: &CheckConfig) -> Vec<LawReport> {
    let cat: Catalogue<Graph> = Catalogue::new(cfg.size_bound);
    vec![
        dagger_laws(cfg, &cat),
        symmetry_laws(cfg, &cat),
        tensor_laws(cfg, &cat),
        tensor_associativity_laws(cfg, &cat),
        snake_laws(cfg),
        join_laws(cfg, &cat),
    ]
}

/// Dagger, symmetry, tensor, compact and join-enrichment laws of 𝒢. Snake
/// equations run one size beyond `size_bound`.
pub fn check_enriched_compact(cfg: &CheckConfig) -> LawReport {
    LawReport::combine("enriched-dagger-compact", enriched_compact_reports(cfg))
}

/// Whether a state graph is the complete graph on `{*} × U` for some `U ⊆ X`,
/// decided by trying every subset.
fn in_embedding_image(g: &Graph) -> bool {
    let x = g.cod();
    (0..1u64 << x.len()).any(|mask| {
        let subset = Relation::from_fn(&FiniteSet::unit(), x, |_, j| mask >> j & 1 == 1);
        embed_graph(&subset) == *g
    })
}

/// `(pure, total)` state counts for an `n`-element set.
pub fn pure_state_census(n: usize) -> (u64, u64) {
    let x = FiniteSet::letters("X", n);
    enumerate_state_graphs(&x).expect("small state spaces").fold((0, 0), |(pure, total), g| {
        let s = State::new(g).expect("unit domain");
        (pure + is_pure(&s) as u64, total + 1)
    })
}

/// `is_pure` agrees with membership in the image of the Rel embedding, and
/// there are exactly `2^n` pure states.
pub fn check_purity_equivalence(cfg: &CheckConfig) -> LawReport {
    let mut run = Run::new("purity", cfg);
    for n in 0..=cfg.size_bound {
        let x = FiniteSet::letters("X", n);
        let mut pure = 0u64;
        let graphs = match enumerate_state_graphs(&x) {
            Ok(g) => g,
            Err(e) => {
                run.check(Err(e.to_string()), Default::default);
                continue;
            }
        };
        for g in graphs {
            let s = State::new(g.clone()).expect("unit domain");
            let verdict = is_pure(&s);
            pure += verdict as u64;
            run.check(expect_equal("is_pure vs image of the embedding", &verdict, &in_embedding_image(&g)), || {
                instance_of(&[&g])
            });
        }
        run.check(expect_equal("pure state count", &pure, &(1u64 << n)), Default::default);
    }
    run.finish()
}

/// The two mixed path states on `{x,y,z}` whose union is the pure triangle.
pub fn mixing_example() -> (State, State, State) {
    let x = FiniteSet::new("X", ["x", "y", "z"]).unwrap();
    let path = |edges: [(&str, &str); 2]| {
        let v = |l: &str| (Element::Unit, Element::atom(l));
        let g = Graph::new(&FiniteSet::unit(), &x, ["x", "y", "z"].map(v), edges.map(|(p, q)| (v(p), v(q))))
            .expect("vertices are in {*}×X");
        State::new(g).expect("unit domain")
    };
    let first = path([("x", "z"), ("x", "y")]);
    let second = path([("x", "z"), ("z", "y")]);
    let union = graph_join(&FiniteSet::unit(), &x, [first.graph(), second.graph()]).expect("same homset");
    (first, second, State::new(union).expect("unit domain"))
}

/// Pairs of mixed states on an `n`-element set whose join is pure.
pub fn mixing_pairs(n: usize) -> Vec<(Graph, Graph)> {
    let x = FiniteSet::letters("X", n);
    let states: Vec<Graph> = enumerate_state_graphs(&x).expect("small state spaces").collect();
    let mut out = Vec::new();
    for g1 in &states {
        if g1.is_complete() {
            continue;
        }
        for g2 in &states {
            if g2.is_complete() {
                continue;
            }
            let j = graph_join(g1.dom(), g1.cod(), [g1, g2]).expect("same homset");
            if j.is_complete() {
                out.push((g1.clone(), g2.clone()));
            }
        }
    }
    out
}

/// Two mixed states with a pure union: the three-vertex instance, and an
/// exhaustive search over pairs of states of a three-element set.
pub fn demo_mixing() -> LawReport {
    let cfg = CheckConfig::with_size_bound(3);
    let mut run = Run::new("mixing", &cfg);
    let (first, second, union) = mixing_example();
    let witness = || instance_of(&[first.graph(), second.graph()]);
    run.check(expect_equal("first path is pure", &is_pure(&first), &false), witness);
    run.check(expect_equal("second path is pure", &is_pure(&second), &false), witness);
    run.check(expect_equal("union is pure", &is_pure(&union), &true), witness);
    let triangle = union.graph();
    let doubled = graph_join(triangle.dom(), triangle.cod(), [triangle, triangle]).expect("same homset");
    run.check(expect_equal("pure ∨ itself stays pure", &doubled.is_complete(), &true), || instance_of(&[triangle]));
    let found = mixing_pairs(3).len();
    run.check(
        if found > 0 { Ok(()) } else { Err("no mixed pair with a pure union among 3-element states".to_string()) },
        Default::default,
    );
    run.finish()
}

fn cp_closed(what: &str, m: &CpMorphism) -> Result<(), String> {
    if is_cp(m.rel()).map_err(err)? {
        Ok(())
    } else {
        Err(format!("{what} is not completely positive"))
    }
}

/// Everything built by `cp_compose`, `cp_tensor`, `cp_dagger`,
/// `embed_double` and `functor_c` satisfies the CP axioms.
pub fn check_cp_axioms_closure(cfg: &CheckConfig) -> LawReport {
    let cps: Catalogue<CpMorphism> = Catalogue::new(cfg.size_bound);
    let rels: Catalogue<Relation> = Catalogue::new(cfg.size_bound);
    let graphs: Catalogue<Graph> = Catalogue::new(cfg.size_bound);
    let mut run = Run::new("cp-closure", cfg);
    for x in cps.objects() {
        let id = CpMorphism::identity(x);
        run.check(cp_closed("identity", &id), || instance_of(&[&id]));
    }
    for a in cps.sizes() {
        for b in cps.sizes() {
            run.over([rels.pool(a, b)], |[r]| cp_closed("r ⊗ r", &embed_double(r)));
            run.over([graphs.pool(a, b)], |[g]| cp_closed("C(γ)", &functor_c(g)));
            run.over([cps.pool(a, b)], |[m]| cp_closed("m†", &cp_dagger(m)));
            for c in cps.sizes() {
                run.over([cps.pool(a, b), cps.pool(b, c)], |[r, s]| {
                    cp_closed("s ∘ r", &cp_compose(s, r).map_err(err)?)
                });
                for d in cps.sizes() {
                    run.over([cps.pool(a, b), cps.pool(c, d)], |[f, g]| cp_closed("f ⊗ g", &cp_tensor(f, g)));
                }
            }
        }
    }
    run.finish()
}

/// Closed-form state counts against graph enumeration (`n ≤ n_max`) and
/// brute-force positive relations (`n ≤ brute_bound`).
pub fn check_census(n_max: usize, brute_bound: usize, cfg: &CheckConfig) -> LawReport {
    let mut run = Run::new("census", cfg);
    for n in 0..=n_max {
        let x = FiniteSet::letters("X", n);
        let closed = count_states(n as u64);
        match enumerate_state_graphs(&x) {
            Ok(graphs) => {
                run.check(expect_equal("state graphs", &BigUint::from(graphs.count()), &closed), Default::default)
            }
            Err(e) => run.check(Err(e.to_string()), Default::default),
        }
        if n <= brute_bound {
            match enumerate_positive_relations(&x, brute_bound) {
                Ok(rels) => run
                    .check(expect_equal("positive relations", &BigUint::from(rels.count()), &closed), Default::default),
                Err(e) => run.check(Err(e.to_string()), Default::default),
            }
        }
    }
    run.finish()
}

/// Every suite at the configured bound, census up to five elements.
pub fn run_all(cfg: &CheckConfig) -> Vec<LawReport> {
    let mut reports = vec![check_category_laws(cfg), check_iso(cfg), preservation_check(cfg)];
    reports.extend(enriched_compact_reports(cfg));
    reports.push(check_purity_equivalence(&CheckConfig { size_bound: cfg.size_bound.max(3), ..cfg.clone() }));
    reports.push(demo_mixing());
    reports.push(check_cp_axioms_closure(cfg));
    reports.push(check_census(5, DEFAULT_BRUTE_FORCE_BOUND, cfg));
    reports
}

/// Checks a graph property over every graph between sets of size at most
/// `cfg.size_bound`. Useful for ad-hoc conjectures; a failing report carries
/// the offending graph.
pub fn check_graph_property(name: &str, cfg: &CheckConfig, property: impl Fn(&Graph) -> bool) -> LawReport {
    let cat: Catalogue<Graph> = Catalogue::new(cfg.size_bound);
    let mut run = Run::new(name, cfg);
    for a in cat.sizes() {
        for b in cat.sizes() {
            run.over(
                [cat.pool(a, b)],
                |[g]| {
                    if property(g) {
                        Ok(())
                    } else {
                        Err(format!("property fails on {g:?}"))
                    }
                },
            );
        }
    }
    run.finish()
}
