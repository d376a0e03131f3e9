use springer_core::branching::{descent_search, split_descent};
use springer_core::splitforms::{
    arf_invariant, assemble, basic_gram, centralizer_generator, epsilon_of, jordan_type, FormMatrix,
};
use springer_core::uniclass::{enumerate_classes, select_nonsplit_generator, splits_in_so};
use springer_core::{
    CharParity, ClassLabel, Eps, EpsilonMap, Error, Family, Frobenius, GroupDescriptor, Partition, SplitTag,
};

fn label(parts: &[u32], eps: &[(u32, Eps)], split: SplitTag) -> ClassLabel {
    ClassLabel::new(Partition::new(parts.to_vec()), EpsilonMap::from_pairs(eps.iter().copied()), split)
}

#[test]
fn odd_dimension_has_no_basic_form() {
    assert!(matches!(basic_gram(5), Err(Error::OddDimension(5))));
    assert!(matches!(basic_gram(0), Err(Error::OddDimension(0))));
    assert!(basic_gram(6).is_ok());
}

#[test]
fn regular_symplectic_element_in_char_two() {
    let g = GroupDescriptor::split(Family::Sp, 2, CharParity::Two);
    let a = assemble(&g, &label(&[4], &[(4, Eps::One)], SplitTag::None)).unwrap();
    assert_eq!(a.dim(), 4);
    assert_eq!(jordan_type(&a.element).unwrap(), Partition::new(vec![4]));
    let (FormMatrix::Gf2(u), FormMatrix::Gf2(f)) = (&a.element, &a.gram) else { panic!("char two is GF(2)") };
    assert_eq!(epsilon_of(u, f).unwrap().get(4), Eps::One);
    let gen = centralizer_generator(&a, 1).unwrap();
    assert!(a.commutes_with_element(&gen) && a.group_element_preserves_form(&gen));
}

#[test]
fn orthogonal_char_two_assembly_is_split() {
    let g = GroupDescriptor::split(Family::SoEven, 2, CharParity::Two);
    for split in [SplitTag::Prime, SplitTag::DoublePrime] {
        let a = assemble(&g, &label(&[2, 2], &[(2, Eps::Zero)], split)).unwrap();
        assert_eq!(arf_invariant(a.quadratic.as_ref().unwrap()).unwrap(), 0);
        assert!(a.element_preserves_form());
        // ε = 0 pairs carry no generator
        assert!(a.generators.is_empty());
    }
}

#[test]
fn odd_char_symplectic_pair_is_signed() {
    let g = GroupDescriptor::split(Family::Sp, 2, CharParity::Odd);
    let a = assemble(&g, &ClassLabel::odd_char(Partition::new(vec![2, 2]), Family::Sp)).unwrap();
    let f = a.gram.to_rows();
    assert!(f.iter().flatten().any(|&x| x < 0));
    assert!(a.gram_has_expected_type() && a.element_preserves_form());
    assert_eq!(jordan_type(&a.element).unwrap(), Partition::new(vec![2, 2]));
}

#[test]
fn nonsplit_descriptors_are_rejected_by_assembly() {
    let g = GroupDescriptor::new(Family::SoEven, 2, CharParity::Two, Frobenius::NonSplit).unwrap();
    let c = label(&[2, 2], &[(2, Eps::One)], SplitTag::None);
    c.validate(&g).unwrap();
    assert!(assemble(&g, &c).is_err());
}

#[test]
fn splitting_examples() {
    let two = GroupDescriptor::split(Family::SoEven, 2, CharParity::Two);
    assert!(splits_in_so(&label(&[2, 2], &[(2, Eps::Zero)], SplitTag::Prime), &two).unwrap());
    let odd8 = GroupDescriptor::split(Family::SoEven, 4, CharParity::Odd);
    assert!(splits_in_so(&ClassLabel::odd_char(Partition::new(vec![4, 4]), Family::SoEven), &odd8).unwrap());
    let odd4 = GroupDescriptor::split(Family::SoEven, 2, CharParity::Odd);
    assert!(!splits_in_so(&ClassLabel::odd_char(Partition::new(vec![1, 1, 1, 1]), Family::SoEven), &odd4).unwrap());
    let sp = GroupDescriptor::split(Family::Sp, 2, CharParity::Odd);
    assert!(splits_in_so(&ClassLabel::odd_char(Partition::new(vec![4]), Family::Sp), &sp).is_err());
}

#[test]
fn nonsplit_generator_examples() {
    let odd = GroupDescriptor::new(Family::SoEven, 4, CharParity::Odd, Frobenius::NonSplit).unwrap();
    let c = ClassLabel::odd_char(Partition::new(vec![1, 1, 3, 3]), Family::SoEven);
    assert_eq!(select_nonsplit_generator(&odd, &c).unwrap().key(), 1);
    let two = GroupDescriptor::new(Family::SoEven, 4, CharParity::Two, Frobenius::NonSplit).unwrap();
    let c = label(&[2, 2, 4], &[(2, Eps::One), (4, Eps::One)], SplitTag::None);
    assert_eq!(select_nonsplit_generator(&two, &c).unwrap().key(), 2);
    let c = ClassLabel::new(Partition::new(vec![4, 4]), EpsilonMap::new(), SplitTag::Prime);
    assert!(select_nonsplit_generator(&odd, &c).is_err());
}

#[test]
fn every_char_two_class_descends_to_a_split_target() {
    for n in 1..=5 {
        for family in [Family::Sp, Family::SoEven] {
            let g = GroupDescriptor::split(family, n, CharParity::Two);
            for c in enumerate_classes(&g) {
                let d = descent_search(&g, &c, false).unwrap_or_else(|e| panic!("{g} {c}: {e}"));
                assert!(d.split_target);
                assert_eq!(d.target.lambda.size() + 2, c.lambda.size());
                assert!(split_descent(&g, &c).unwrap().contains(&d));
            }
        }
    }
}
