use super::decl::VcClass;
use serde::Serialize;

/// The rules the classifier can apply, each backed by a published result.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Rule {
    R0,
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
    R7,
    /// Membership of a term-given linear order in the ω-categorical class.
    #[serde(rename = "CLASS-C")]
    ClassC,
    /// A count supplied by the caller.
    #[serde(rename = "DECL")]
    Decl,
    /// Rewriting to a finite union of finite products.
    #[serde(rename = "NF")]
    NormalForm,
}

impl Rule {
    pub fn id(self) -> &'static str {
        match self {
            Rule::R0 => "R0",
            Rule::R1 => "R1",
            Rule::R2 => "R2",
            Rule::R3 => "R3",
            Rule::R4 => "R4",
            Rule::R5 => "R5",
            Rule::R6 => "R6",
            Rule::R7 => "R7",
            Rule::ClassC => "CLASS-C",
            Rule::Decl => "DECL",
            Rule::NormalForm => "NF",
        }
    }

    pub fn citation(self) -> &'static str {
        match self {
            Rule::R0 => "a complete theory has no countable models iff it has a finite model",
            Rule::R1 => {
                "in the closure of a class of connected structures that satisfies the sharp Vaught \
                 dichotomy and is good for products, a finite union of finite products has at most one \
                 countable model iff every factor does, and continuum many if some factor does; \
                 certified classes: linear orders, rooted trees with a finite monomorphic decomposition, \
                 initially finite trees satisfying the dichotomy"
            }
            Rule::R2 => {
                "an infinite disjoint union of linear orders has one or continuum many countable models, \
                 and one iff every component is finite or ω-categorical and the components have \
                 finitely many order types"
            }
            Rule::R3 => {
                "a countable disjoint union of connected structures is ω-categorical iff every component \
                 is and the components have finitely many isomorphism types"
            }
            Rule::R4 => {
                "if a component of a disjoint union of connected structures has finite diameter and \
                 uncountably many countable models, the union has at least as many"
            }
            Rule::R5 => "a lexicographic sum of ω-categorical parts over a finite index is ω-categorical",
            Rule::R6 => "a rooted tree is ω-categorical iff the tree without its root is",
            Rule::R7 => {
                "the sharp Vaught dichotomy holds for every theory with a model admitting a finite \
                 monomorphic decomposition"
            }
            Rule::ClassC => {
                "the countable ω-categorical linear order types are exactly those generated from 1 by \
                 finite sums and shuffles of finite sets"
            }
            Rule::Decl => "declared count, taken as trusted input",
            Rule::NormalForm => {
                "the closure under finite products and finite disjoint unions consists of finite unions \
                 of finite products, since products distribute over unions"
            }
        }
    }
}

/// One applied rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub rule: Rule,
    pub citation: String,
    /// What the rule was applied to.
    pub subject: String,
    pub conclusion: String,
}

impl TraceStep {
    pub(crate) fn new(
        rule: Rule,
        subject: impl Into<String>,
        conclusion: impl Into<String>,
    ) -> Self {
        TraceStep {
            rule,
            citation: rule.citation().to_string(),
            subject: subject.into(),
            conclusion: conclusion.into(),
        }
    }

    pub(crate) fn concludes(rule: Rule, subject: impl Into<String>, class: VcClass) -> Self {
        TraceStep::new(rule, subject, class.to_string())
    }
}
