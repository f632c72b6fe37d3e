use cobkit_cli::{parse_str, serialize, CobFile};
use cobkit_core::gen::{GenParams, Generator};
use proptest::prelude::*;

proptest! {
    #[test]
    fn serialize_then_parse_is_identity(seed in any::<u64>()) {
        let mut g = Generator::new(GenParams { max_circles: 6, ..GenParams::default() }.with_seed(seed));
        for file in [CobFile::Two(g.any_cobordism2()), CobFile::One(g.any_cobordism1())] {
            let text = serialize(&file);
            let back = parse_str(&text).unwrap();
            prop_assert!(back.strict_equals(&file));
            prop_assert_eq!(serialize(&back), text);
        }
    }
}
