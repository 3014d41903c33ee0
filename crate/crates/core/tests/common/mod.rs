#![allow(dead_code)]

use octoplane::albert::AlbertElement;
use octoplane::compalg::Elem;
use octoplane::scalars::{CQSqrt3, QSqrt3, Rat};
use proptest::prelude::*;

pub fn rat() -> impl Strategy<Value = Rat> {
    (-40i64..=40, 1i64..=7).prop_map(|(n, d)| Rat::new(n, d))
}

pub fn qs() -> impl Strategy<Value = QSqrt3> {
    (rat(), rat()).prop_map(|(a, b)| QSqrt3::new(a, b))
}

pub fn cqs() -> impl Strategy<Value = CQSqrt3> {
    (qs(), qs()).prop_map(|(a, b)| CQSqrt3::new(a, b))
}

/// Small coordinates keep exact products cheap.
pub fn coord() -> impl Strategy<Value = QSqrt3> {
    prop_oneof![
        4 => (-4i64..=4).prop_map(QSqrt3::int),
        1 => (-3i64..=3, 1i64..=3).prop_map(|(n, d)| QSqrt3::ratio(n, d)),
        1 => (-2i64..=2).prop_map(|n| QSqrt3::sqrt3_times(n, 1)),
    ]
}

pub fn elem() -> impl Strategy<Value = Elem<QSqrt3>> {
    proptest::array::uniform8(coord())
}

pub fn albert_elem() -> impl Strategy<Value = AlbertElement<QSqrt3>> {
    (proptest::array::uniform3(coord()), elem(), elem(), elem())
        .prop_map(|(l, a, b, c)| AlbertElement { l, x: [a, b, c] })
}
