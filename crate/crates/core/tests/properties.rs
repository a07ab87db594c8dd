//! Randomised properties of the chain-level constructions, the pairing and
//! the signature, 256 cases each.

use braco_core::chain_core::DisorientedComplex;
use braco_core::surface_model::build_cellular_complex;
use braco_core::tangle_model::build_tangle_complex;
use braco_testkit::properties as p;
use braco_testkit::strategies as s;
use proptest::prelude::*;

fn tangle_complex(d: &braco_core::tangle_model::BridgeDiagram) -> DisorientedComplex {
    build_tangle_complex(d).expect("generated diagrams are valid")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn tangle_boundaries_compose_to_zero(d in s::bridge_diagram()) {
        p::tangle_complex_is_a_complex(&d)?;
    }

    #[test]
    fn surface_boundaries_compose_to_zero(d in s::surface_description()) {
        p::surface_complex_is_a_complex(&d)?;
    }

    #[test]
    fn tangle_homology_survives_disorientation_flips(d in s::bridge_diagram(), which in 0usize..16) {
        p::tangle_flip_preserves_homology(&d, which)?;
    }

    #[test]
    fn surface_homology_survives_disorientation_flips(d in s::surface_description(), which in 0usize..16) {
        p::surface_flip_preserves_homology(&d, which)?;
    }

    #[test]
    fn tangle_homology_survives_relabelling(d in s::bridge_diagram(), raw in prop::collection::vec(0u32..1000, 16)) {
        p::tangle_relabel_preserves_homology(&d, &raw)?;
    }

    #[test]
    fn surface_homology_survives_relabelling(d in s::surface_description(), raw in prop::collection::vec(0u32..1000, 16)) {
        p::surface_relabel_preserves_homology(&d, &raw)?;
    }

    #[test]
    fn tangle_homology_survives_basis_change(d in s::bridge_diagram(), raw in prop::collection::vec(0u32..1000, 48)) {
        p::basis_change_preserves_homology(&tangle_complex(&d), &raw)?;
    }

    #[test]
    fn surface_homology_survives_basis_change(d in s::surface_description(), raw in prop::collection::vec(0u32..1000, 64)) {
        let c = build_cellular_complex(&d).expect("generated descriptions are valid");
        p::basis_change_preserves_homology(&c, &raw)?;
    }

    #[test]
    fn pairing_is_symmetric_without_passes(b in s::band_diagram(false), raw in prop::collection::vec(0u32..1000, 16)) {
        p::pairing_is_symmetric(&b, &raw)?;
    }

    #[test]
    fn pairing_is_symmetric_with_passes(b in s::band_diagram(true), raw in prop::collection::vec(0u32..1000, 16)) {
        p::pairing_is_symmetric(&b, &raw)?;
    }

    #[test]
    fn capped_classes_pair_to_zero(b in s::band_diagram(true)) {
        p::capped_classes_pair_to_zero(&b)?;
    }

    #[test]
    fn linking_number_is_symmetric((a, b) in s::weighted_pair()) {
        p::linking_number_is_symmetric(&a, &b)?;
    }

    #[test]
    fn extending_the_surface_restricts_the_pairing(b in s::band_diagram(true), raw in prop::collection::vec(0u32..1000, 24)) {
        p::extension_restricts_pairing(&b, &raw)?;
    }

    #[test]
    fn ribbon_pass_contributes_plus_or_minus_one(raw in prop::collection::vec(0u32..1000, 24)) {
        p::ribbon_pass_contributions(&raw)?;
    }

    #[test]
    fn link_signature_ignores_overall_reversal(b in s::band_diagram(true)) {
        p::signature_ignores_reversal(&b)?;
    }

    #[test]
    fn smith_form_ignores_signed_permutations((m, cols) in s::int_matrix(), raw in prop::collection::vec(0u32..1000, 24)) {
        p::smith_form_ignores_signed_permutations(&m, cols, &raw)?;
    }

    #[test]
    fn determinant_is_product_of_invariant_factors((m, cols) in s::int_matrix()) {
        p::determinant_is_product_of_factors(&m, cols)?;
    }

    #[test]
    fn form_signature_is_a_congruence_invariant(m in s::symmetric_matrix(), raw in prop::collection::vec(0u32..1000, 24)) {
        p::form_signature_is_a_congruence_invariant(&m, &raw)?;
    }

    #[test]
    fn tangle_torsion_matches_goeritz_determinant(b in s::braid()) {
        p::tangle_torsion_is_the_determinant(&b)?;
    }

    #[test]
    fn goeritz_and_seifert_oracles_agree(b in s::braid()) {
        p::oracles_agree(&b)?;
    }
}
