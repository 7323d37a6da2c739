//! The mutually inverse functors `G : CP(Rel) → 𝒢` and `C : 𝒢 → CP(Rel)`.

use crate::bits::BitSet;
use crate::graphcat::{embed_graph, graph_compose, graph_dagger, graph_identity, graph_leq, graph_tensor, Graph};
use crate::lawcheck::runner::{expect_equal, Catalogue, CheckConfig, Run};
use crate::lawcheck::LawReport;
use crate::relcore::{cp_compose, cp_dagger, cp_tensor, embed_double, product_set, CpMorphism, Relation};

/// `G(m)`: vertex `(a,b)` iff `m(a,a,b,b)`, edge `{(a,b),(a',b')}` iff `m(a,a',b,b')`.
pub fn functor_g(m: &CpMorphism) -> Graph {
    let (na, nb) = (m.dom().len(), m.cod().len());
    let n = na * nb;
    let mut adj = BitSet::new(n * n);
    for (i, j) in m.rel().index_pairs() {
        let (a, a2) = (i / na, i % na);
        let (b, b2) = (j / nb, j % nb);
        adj.insert((a * nb + b) * n + a2 * nb + b2);
    }
    Graph::from_adjacency(m.dom(), m.cod(), adj)
}

/// `C(γ)(a,a',b,b')` iff `{(a,b),(a',b')}` is an edge of `γ`.
pub fn functor_c(g: &Graph) -> CpMorphism {
    let (a, b) = (g.dom(), g.cod());
    let (na, nb) = (a.len(), b.len());
    let n = na * nb;
    let mut rel = Relation::empty(&product_set(a, a), &product_set(b, b));
    for k in g.adjacency().ones() {
        let (s, t) = (k / n, k % n);
        let (x, y) = (s / nb, s % nb);
        let (x2, y2) = (t / nb, t % nb);
        rel.insert_index(x * na + x2, y * nb + y2);
    }
    CpMorphism::from_parts(a, b, rel)
}

/// `C(G(m)) = m` for every CP morphism and `G(C(γ)) = γ` for every graph
/// between sets of size at most `size_bound`, together with preservation of
/// composition by both functors.
pub fn roundtrip_check(size_bound: usize) -> LawReport {
    roundtrip_check_with(&CheckConfig::with_size_bound(size_bound))
}

pub fn roundtrip_check_with(cfg: &CheckConfig) -> LawReport {
    let cps: Catalogue<CpMorphism> = Catalogue::new(cfg.size_bound);
    let graphs: Catalogue<Graph> = Catalogue::new(cfg.size_bound);
    let mut run = Run::new("functor-isomorphism", cfg);
    for a in cps.sizes() {
        for b in cps.sizes() {
            if let (Some(ms), Some(gs)) = (cps.pool(a, b).members(), graphs.pool(a, b).members()) {
                run.check(
                    expect_equal("homset sizes |CP(Rel)(A,B)| vs |𝒢(A,B)|", &ms.len(), &gs.len()),
                    Default::default,
                );
            }
            run.over([cps.pool(a, b)], |[m]| expect_equal("C(G(m))", &functor_c(&functor_g(m)), m));
            run.over([graphs.pool(a, b)], |[g]| expect_equal("G(C(g))", &functor_g(&functor_c(g)), g));
        }
    }
    for a in cps.sizes() {
        for b in cps.sizes() {
            for c in cps.sizes() {
                run.over([cps.pool(a, b), cps.pool(b, c)], |[r, s]| {
                    let lhs = functor_g(&cp_compose(s, r).map_err(|e| e.to_string())?);
                    let rhs = graph_compose(&functor_g(s), &functor_g(r)).map_err(|e| e.to_string())?;
                    expect_equal("G(s ∘ r)", &lhs, &rhs)
                });
                run.over([graphs.pool(a, b), graphs.pool(b, c)], |[g1, g2]| {
                    let lhs = functor_c(&graph_compose(g2, g1).map_err(|e| e.to_string())?);
                    let rhs = cp_compose(&functor_c(g2), &functor_c(g1)).map_err(|e| e.to_string())?;
                    expect_equal("C(g2 ∘ g1)", &lhs, &rhs)
                });
            }
        }
    }
    run.finish()
}

/// `G` preserves identities, tensor, dagger and order, sends doubled relations
/// to complete graphs, and computes diagonals of composites through a single
/// middle element.
pub fn preservation_check(cfg: &CheckConfig) -> LawReport {
    let cps: Catalogue<CpMorphism> = Catalogue::new(cfg.size_bound);
    let rels: Catalogue<Relation> = Catalogue::new(cfg.size_bound);
    let mut run = Run::new("functor-structure", cfg);
    for x in cps.objects() {
        run.check(expect_equal("G(1)", &functor_g(&CpMorphism::identity(x)), &graph_identity(x)), Default::default);
        run.check(expect_equal("C(1)", &functor_c(&graph_identity(x)), &CpMorphism::identity(x)), Default::default);
    }
    for a in cps.sizes() {
        for b in cps.sizes() {
            let pool = cps.pool(a, b);
            run.over([pool], |[m]| expect_equal("G(m†)", &functor_g(&cp_dagger(m)), &graph_dagger(&functor_g(m))));
            run.over([pool, pool], |[m1, m2]| {
                let included = m1.rel().is_subset(m2.rel()).map_err(|e| e.to_string())?;
                let below = graph_leq(&functor_g(m1), &functor_g(m2)).map_err(|e| e.to_string())?;
                expect_equal("m1 ⊆ m2 vs G(m1) ≤ G(m2)", &included, &below)
            });
            run.over([rels.pool(a, b)], |[r]| expect_equal("G(r ⊗ r)", &functor_g(&embed_double(r)), &embed_graph(r)));
            for c in cps.sizes() {
                for d in cps.sizes() {
                    run.over([pool, cps.pool(c, d)], |[f, g]| {
                        expect_equal(
                            "G(f ⊗ g)",
                            &functor_g(&cp_tensor(f, g)),
                            &graph_tensor(&functor_g(f), &functor_g(g)),
                        )
                    });
                }
                run.over([pool, cps.pool(b, c)], |[r, s]| {
                    let sr = cp_compose(s, r).map_err(|e| e.to_string())?;
                    let (na, nb, nc) = (r.dom().len(), r.cod().len(), s.cod().len());
                    for x in 0..na {
                        for z in 0..nc {
                            let through = (0..nb).any(|y| r.holds(x, x, y, y) && s.holds(y, y, z, z));
                            if sr.holds(x, x, z, z) != through {
                                return Err(format!(
                                    "diagonal of s ∘ r at ({x},{z}) disagrees with a single middle element"
                                ));
                            }
                        }
                    }
                    Ok(())
                });
            }
        }
    }
    run.finish()
}
