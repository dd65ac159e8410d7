use super::WitnessField::{self, Complex, Real};

pub(super) type Template = &'static [&'static [&'static str]];

pub(super) struct Entry {
    pub params: &'static [&'static str],
    pub claimed: &'static str,
    /// Per-entry matrix and variables, overriding the family template.
    pub matrix: Option<(Template, &'static [&'static str])>,
}

pub(super) struct Family {
    pub name: &'static str,
    pub vars: &'static [&'static str],
    pub template: Template,
    /// The witness is the inverse of the instantiated template.
    pub inverse: bool,
    pub field: WitnessField,
    pub entries: &'static [Entry],
}

const fn e(params: &'static [&'static str], claimed: &'static str) -> Entry {
    Entry { params, claimed, matrix: None }
}

const fn m(matrix: Template, claimed: &'static str) -> Entry {
    Entry { params: &[], claimed, matrix: Some((matrix, &[])) }
}

const fn g(param: &'static [&'static str], claimed: &'static str) -> Entry {
    Entry { params: param, claimed, matrix: Some((COMPLEX_G, &["a"])) }
}

const COMPLEX_G: Template =
    &[&["0", "1", "1", "1"], &["1", "0", "i", "1"], &["1", "-i", "0", "a"], &["1", "1", "~a", "0"]];

pub(super) const FAMILIES: &[Family] = &[
    Family {
        name: "VierOne",
        vars: &["x", "y", "a"],
        template: &[&["x", "5", "1", "1"], &["5", "y", "1", "1"], &["1", "1", "1", "a"], &["1", "1", "a", "1"]],
        inverse: false,
        field: Real,
        entries: &[
            e(&["2", "1/2", "2"], "A+A*A*A+"),
            e(&["6", "6", "-3/4"], "A+A+A*A-"),
            e(&["1/2", "1/2", "2"], "A+A-A*A+"),
            e(&["-6", "-5", "-47/5"], "A*A*A+N"),
            e(&["4", "5", "-3/5"], "A+A*S-N"),
            e(&["-5", "-5", "0"], "A*S*A*A+"),
            e(&["1", "3", "0"], "A+S*A*A-"),
            e(&["1", "25", "1/2"], "A+S+A*A-"),
            e(&["5/2", "10", "-9/10"], "A+S+A-A-"),
            e(&["1", "3/4", "4/3"], "A+S-A*A+"),
        ],
    },
    Family {
        name: "VierTwo",
        vars: &["x", "y", "a"],
        template: &[&["-2", "2", "2", "0"], &["2", "-2", "0", "2"], &["2", "0", "x", "a"], &["0", "2", "a", "y"]],
        inverse: false,
        field: Real,
        entries: &[e(&["-2", "2", "1"], "A*S*A+N"), e(&["2", "2", "3"], "A*S-A+N"), e(&["-2", "-2", "-1"], "A-S+A+N")],
    },
    Family {
        name: "VierThree",
        vars: &["x", "y", "z", "a"],
        template: &[&["x", "1", "1", "-1"], &["1", "y", "1", "1"], &["1", "1", "z", "a"], &["-1", "1", "a", "0"]],
        inverse: false,
        field: Real,
        entries: &[
            e(&["0", "0", "0", "1"], "NA-A*A+"),
            e(&["0", "0", "0", "0"], "NS-S*A+"),
            e(&["2", "2", "4", "1"], "S+A*A*A-"),
        ],
    },
    Family {
        name: "VierFour",
        vars: &["x", "a", "b"],
        template: &[&["0", "a", "2", "1"], &["a", "x", "1", "2"], &["2", "1", "1", "b"], &["1", "2", "b", "1"]],
        inverse: false,
        field: Real,
        entries: &[
            e(&["-1", "1", "0"], "S*A*A*A+"),
            e(&["-1", "2", "5"], "S*A-A+A+"),
            e(&["-1", "2", "2"], "S*A-A+A-"),
            e(&["0", "1", "0"], "S+A*A*A+"),
            e(&["0", "1/2", "2"], "S+A-A+A+"),
            e(&["0", "2", "2"], "S+A-A+A-"),
            e(&["0", "5", "-2"], "S+A-A-A+"),
            e(&["0", "-1", "-2"], "S+A-A-A-"),
            e(&["-1", "2+sqrt5", "0"], "S*A*S*A+"),
            e(&["0", "4", "0"], "S+A*S-A+"),
            e(&["-1", "0", "0"], "S*S*A*A+"),
            e(&["-1", "0", "2"], "S*S-A+A+"),
            e(&["-1", "0", "4"], "S*S-A+A-"),
            e(&["1", "3", "0"], "S+S*A*A+"),
            e(&["1", "3", "1"], "S+S-A*A+"),
        ],
    },
    Family {
        name: "VierFive",
        vars: &["x", "a", "b"],
        template: &[&["0", "a", "1", "2"], &["a", "-1", "1", "1"], &["1", "1", "1", "b"], &["2", "1", "b", "x"]],
        inverse: false,
        field: Real,
        entries: &[
            e(&["-2", "1", "10"], "S*A*A+A+"),
            e(&["-5", "1", "1"], "S*A*A+A-"),
            e(&["-2", "2", "1/2"], "S*A*S+A+"),
            e(&["-2", "0", "3/5"], "S*S*A+A+"),
        ],
    },
    Family {
        name: "VierSix",
        vars: &["x", "a"],
        template: &[&["0", "0", "1", "0"], &["0", "-1", "0", "1"], &["1", "0", "1", "a"], &["0", "1", "a", "x"]],
        inverse: false,
        field: Real,
        entries: &[e(&["4", "1"], "S*S*S*A+"), e(&["-5", "2"], "S*S*S+A-")],
    },
    Family {
        name: "FiveOne",
        vars: &["a", "b"],
        template: &[
            &["1", "a", "2", "1", "1"],
            &["a", "1", "2", "1", "1"],
            &["2", "2", "1", "1", "1"],
            &["1", "1", "1", "-1", "b"],
            &["1", "1", "1", "b", "-1"],
        ],
        inverse: true,
        field: Real,
        entries: &[
            e(&["-2", "2"], "A*A*A+A*A-"),
            e(&["-2", "1"], "A*A*S+A*A-"),
            e(&["-3", "2"], "A*S*A+A*A-"),
            e(&["7", "2"], "A*S-A+A*A-"),
            e(&["-3", "1"], "A*S*S+A*A-"),
            e(&["7", "1"], "A*S-S+A*A-"),
        ],
    },
    Family {
        name: "FiveTwo",
        vars: &["x", "y", "a", "b", "c"],
        template: &[
            &["x", "a", "b", "1", "1"],
            &["a", "y", "c", "1", "1"],
            &["b", "c", "0", "1", "1"],
            &["1", "1", "1", "0", "1"],
            &["1", "1", "1", "1", "0"],
        ],
        inverse: true,
        field: Real,
        entries: &[
            e(&["1", "-1", "-1", "1", "1"], "A*A*A+S*A-"),
            e(&["-1", "0", "-1", "1", "1"], "A*A*A+S+A-"),
            e(&["1", "0", "1", "1", "3"], "A*A*A+S-A-"),
            e(&["1", "-1", "-1", "1", "0"], "A*A*S+S*A-"),
            e(&["-1", "0", "0", "1", "-1"], "A*A*S+S+A-"),
            e(&["1", "0", "0", "1", "1"], "A*A*S+S-A-"),
            e(&["1", "-1", "-1", "1/2", "1"], "A*S*A+S*A-"),
            e(&["-1", "0", "-1", "1", "2"], "A*S*A+S+A-"),
            e(&["1", "0", "1/2", "1", "-1"], "A*S*A+S-A-"),
            e(&["1", "-1", "1", "1/2", "1"], "A*S-A+S*A-"),
            e(&["-1", "0", "-1/2", "1", "1"], "A*S-A+S+A-"),
            e(&["1", "0", "1/2", "1", "1"], "A*S-A+S-A-"),
            e(&["1", "-1", "-1", "0", "0"], "A*S*S+S*A-"),
            e(&["-1", "0", "0", "-1", "0"], "S*S*S+S+A-"),
            e(&["1", "0", "0", "1", "0"], "S*S*S+S-A-"),
            e(&["1", "-1", "0", "1", "0"], "S*S-S+S*A-"),
        ],
    },
    Family {
        name: "SixOne",
        vars: &["x", "y"],
        template: &[
            &["1", "-9", "-2", "5", "2", "2"],
            &["-9", "x", "-2", "2", "5", "2"],
            &["-2", "-2", "y", "2", "2", "5"],
            &["5", "2", "2", "1", "-9", "-2"],
            &["2", "5", "2", "-9", "1", "-2"],
            &["2", "2", "5", "-2", "-2", "-1"],
        ],
        inverse: true,
        field: Real,
        entries: &[
            e(&["1", "-1"], "A-A*S+A+A*A-"),
            e(&["1", "0"], "A-A*S+A+S*A-"),
            e(&["4", "-1"], "A-A*S+S+A*A-"),
            e(&["4", "0"], "A-A*S+S+S*A-"),
        ],
    },
    Family {
        name: "NSFreal",
        vars: &[],
        template: &[],
        inverse: false,
        field: Real,
        entries: &[
            m(
                &[&["1", "0", "1", "1"], &["0", "1", "-1", "1"], &["1", "-1", "1", "0"], &["1", "1", "0", "1"]],
                "A+S+A-A+",
            ),
            m(
                &[
                    &["-1", "1", "1", "1", "1"],
                    &["1", "-1", "-1", "1", "1"],
                    &["1", "-1", "-1", "-1", "1"],
                    &["1", "1", "-1", "-1", "-1"],
                    &["1", "1", "1", "-1", "-1"],
                ],
                "A-NS+NA-",
            ),
            m(
                &[
                    &["-5", "5", "-5", "1", "-1"],
                    &["5", "-9", "-1", "1", "3"],
                    &["-5", "-1", "-9", "3", "1"],
                    &["1", "1", "3", "-1", "-1"],
                    &["-1", "3", "1", "-1", "-1"],
                ],
                "A-S+A+S-A-",
            ),
            m(
                &[
                    &["-2", "-7", "-9", "9", "18", "18"],
                    &["-7", "-21", "-28", "28", "56", "56"],
                    &["-9", "-28", "-37", "38", "76", "76"],
                    &["9", "28", "38", "-40", "-79", "-81"],
                    &["18", "56", "76", "-79", "-156", "-159"],
                    &["18", "56", "76", "-81", "-159", "-162"],
                ],
                "A-S*S+A+S+A-",
            ),
            m(
                &[
                    &["0", "0", "1", "0", "0", "1"],
                    &["0", "0", "0", "1", "0", "1"],
                    &["1", "0", "0", "1", "0", "0"],
                    &["0", "1", "1", "0", "1", "0"],
                    &["0", "0", "0", "1", "0", "-1"],
                    &["1", "1", "0", "0", "-1", "0"],
                ],
                "NS-NS+S*A-",
            ),
            m(
                &[
                    &["0", "0", "1", "0", "0", "1"],
                    &["0", "0", "0", "1", "0", "1"],
                    &["1", "0", "0", "1", "0", "0"],
                    &["0", "1", "1", "0", "1", "0"],
                    &["0", "0", "0", "1", "0", "2"],
                    &["1", "1", "0", "0", "2", "0"],
                ],
                "NS-NS+S+A-",
            ),
        ],
    },
    Family {
        name: "Complex",
        vars: &["a", "b"],
        template: &[
            &["0", "0", "i", "-i", "1", "a"],
            &["0", "0", "0", "b", "1", "-i"],
            &["-i", "0", "0", "0", "1", "1"],
            &["i", "~b", "0", "0", "0", "-2"],
            &["1", "1", "1", "0", "0", "0"],
            &["~a", "i", "1", "-2", "0", "0"],
        ],
        inverse: false,
        field: Complex,
        entries: &[
            e(&["-4", "1"], "NS-NA+S*A-"),
            e(&["2", "-1"], "NS-NA+S+A-"),
            g(&["i"], "NA-S*A+"),
            g(&["-i"], "NA-S+A+"),
        ],
    },
    Family {
        name: "NSFcom",
        vars: &[],
        template: &[],
        inverse: false,
        field: Complex,
        entries: &[
            m(
                &[
                    &["-1", "1", "1", "1", "1"],
                    &["1", "-1", "1", "1", "1"],
                    &["1", "1", "-1", "-i", "i"],
                    &["1", "1", "i", "-1", "-i"],
                    &["1", "1", "-i", "i", "-1"],
                ],
                "A-NA+A*A-",
            ),
            m(
                &[
                    &["0", "i", "i", "i", "i"],
                    &["-i", "0", "i", "i", "i"],
                    &["-i", "-i", "0", "i", "i"],
                    &["-i", "-i", "-i", "0", "i"],
                    &["-i", "-i", "-i", "-i", "0"],
                ],
                "NA-NA+N",
            ),
        ],
    },
];
