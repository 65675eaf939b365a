use opinion_algebra::oracle::{
    oracle_averaging_fission, oracle_averaging_fuse, oracle_cumulative_fission, oracle_cumulative_fuse,
};
use opinion_algebra::{
    averaging_fission, averaging_fuse, cumulative_fission, cumulative_fuse, owner, DogmaticWeights,
    FissionWeights, Opinion, DEFAULT_PRIOR_WEIGHT,
};
use thiserror::Error;

use crate::expr::{BinaryOp, Expression, Node, Span};
use crate::file::OpinionFile;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub fusion_weights: DogmaticWeights,
    pub fission_weights: FissionWeights,
    /// Evaluate every operator through evidence-count arithmetic instead.
    pub via_evidence: bool,
    pub prior_weight: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            fusion_weights: DogmaticWeights::default(),
            fission_weights: FissionWeights::default(),
            via_evidence: false,
            prior_weight: DEFAULT_PRIOR_WEIGHT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("unknown identifier `{name}`")]
    UnknownIdentifier { name: String, span: Span },
    #[error("{source}")]
    Operator {
        #[source]
        source: opinion_algebra::Error,
        span: Span,
    },
}

impl EvalError {
    pub fn span(&self) -> Span {
        match self {
            EvalError::UnknownIdentifier { span, .. } | EvalError::Operator { span, .. } => *span,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Evaluation {
    pub opinion: Opinion,
    pub expectation: Vec<f64>,
}

fn apply(op: BinaryOp, left: &Opinion, right: &Opinion, options: &EvalOptions) -> opinion_algebra::Result<Opinion> {
    let fuse = Some(options.fusion_weights);
    let split = Some(options.fission_weights);
    match op {
        BinaryOp::CumFuse => cumulative_fuse(left, right, fuse),
        BinaryOp::AvgFuse => averaging_fuse(left, right, fuse),
        BinaryOp::CumFission => cumulative_fission(left, right, split),
        BinaryOp::AvgFission => averaging_fission(left, right, split),
    }
}

fn apply_via_evidence(
    op: BinaryOp,
    left: &Opinion,
    right: &Opinion,
    options: &EvalOptions,
) -> opinion_algebra::Result<Opinion> {
    let l = left.to_evidence(options.prior_weight)?;
    let r = right.to_evidence(options.prior_weight)?;
    let (combined, symbol) = match op {
        BinaryOp::CumFuse => (oracle_cumulative_fuse(&l, &r)?, owner::CUMULATIVE_FUSION),
        BinaryOp::AvgFuse => (oracle_averaging_fuse(&l, &r)?, owner::AVERAGING_FUSION),
        BinaryOp::CumFission => (oracle_cumulative_fission(&l, &r)?, owner::CUMULATIVE_FISSION),
        BinaryOp::AvgFission => (oracle_averaging_fission(&l, &r)?, owner::AVERAGING_FISSION),
    };
    let opinion = combined.to_opinion();
    Ok(match owner::compose(left, right, symbol) {
        Some(label) => opinion.with_owner(label),
        None => opinion,
    })
}

fn eval_node(expr: &Expression, file: &OpinionFile, options: &EvalOptions) -> Result<Opinion, EvalError> {
    match &expr.node {
        Node::Identifier(name) => file.get(name).cloned().ok_or_else(|| EvalError::UnknownIdentifier {
            name: name.clone(),
            span: expr.span,
        }),
        Node::Binary { op, left, right } => {
            let l = eval_node(left, file, options)?;
            let r = eval_node(right, file, options)?;
            let result = if options.via_evidence {
                apply_via_evidence(*op, &l, &r, options)
            } else {
                apply(*op, &l, &r, options)
            };
            result.map_err(|source| EvalError::Operator {
                source,
                span: expr.span,
            })
        }
    }
}

/// Post-order evaluation of `expr` against the opinions in `file`.
pub fn evaluate(expr: &Expression, file: &OpinionFile, options: &EvalOptions) -> Result<Evaluation, EvalError> {
    let opinion = eval_node(expr, file, options)?;
    let expectation = opinion.expectation();
    Ok(Evaluation { opinion, expectation })
}
