//! Seeded random terms for sampling-based checks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{TermCD, TermRL};

/// Shape of randomly generated terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TermShape {
    /// Maximum operator nesting depth.
    pub depth: usize,
    /// Variables are drawn from `x1 .. x{vars}`.
    pub vars: usize,
    /// Whether the quantifier symbols may occur.
    pub quantifiers: bool,
}

impl Default for TermShape {
    fn default() -> Self {
        TermShape {
            depth: 4,
            vars: 3,
            quantifiers: true,
        }
    }
}

pub fn var_name(j: usize) -> String {
    format!("x{j}")
}

fn leaf_choice<R: Rng>(rng: &mut R, shape: &TermShape, consts: usize) -> Option<usize> {
    // variables four times as likely as each constant
    let total = 4 * shape.vars + consts;
    let k = rng.gen_range(0..total.max(1));
    if shape.vars > 0 && k < 4 * shape.vars {
        None
    } else {
        Some(
            k.saturating_sub(4 * shape.vars)
                .min(consts.saturating_sub(1)),
        )
    }
}

pub fn random_cd<R: Rng>(rng: &mut R, shape: &TermShape) -> TermCD {
    random_cd_at(rng, shape, shape.depth)
}

fn random_cd_at<R: Rng>(rng: &mut R, shape: &TermShape, depth: usize) -> TermCD {
    if depth == 0 || rng.gen_bool(0.25) {
        return match leaf_choice(rng, shape, 3) {
            None => TermCD::var(var_name(rng.gen_range(1..=shape.vars))),
            Some(0) => TermCD::Zero,
            Some(1) => TermCD::Center,
            Some(_) => TermCD::One,
        };
    }
    let ops = if shape.quantifiers { 6 } else { 5 };
    let sub = |rng: &mut R| random_cd_at(rng, shape, depth - 1);
    match rng.gen_range(0..ops) {
        0 => TermCD::cap(sub(rng), sub(rng)),
        1 => TermCD::cup(sub(rng), sub(rng)),
        2 => TermCD::tensor(sub(rng), sub(rng)),
        3 => TermCD::wand(sub(rng), sub(rng)),
        4 => TermCD::inv(sub(rng)),
        _ => TermCD::cbox(sub(rng)),
    }
}

pub fn random_rl<R: Rng>(rng: &mut R, shape: &TermShape) -> TermRL {
    random_rl_at(rng, shape, shape.depth)
}

fn random_rl_at<R: Rng>(rng: &mut R, shape: &TermShape, depth: usize) -> TermRL {
    if depth == 0 || rng.gen_bool(0.25) {
        return match leaf_choice(rng, shape, 2) {
            None => TermRL::var(var_name(rng.gen_range(1..=shape.vars))),
            Some(0) => TermRL::Zero,
            Some(_) => TermRL::One,
        };
    }
    let ops = if shape.quantifiers { 7 } else { 5 };
    let sub = |rng: &mut R| random_rl_at(rng, shape, depth - 1);
    match rng.gen_range(0..ops) {
        0 => TermRL::meet(sub(rng), sub(rng)),
        1 => TermRL::join(sub(rng), sub(rng)),
        2 => TermRL::times(sub(rng), sub(rng)),
        3 => TermRL::imp(sub(rng), sub(rng)),
        4 => TermRL::neg(sub(rng)),
        5 => TermRL::boxed(sub(rng)),
        _ => TermRL::dia(sub(rng)),
    }
}

/// `count` CD terms from a fixed seed.
pub fn sample_cd(seed: u64, shape: &TermShape, count: usize) -> Vec<TermCD> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_cd(&mut rng, shape)).collect()
}

/// `count` RL terms from a fixed seed.
pub fn sample_rl(seed: u64, shape: &TermShape, count: usize) -> Vec<TermRL> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_rl(&mut rng, shape)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn respects_shape_and_seed() {
        let shape = TermShape::default();
        let a = sample_cd(7, &shape, 200);
        assert_eq!(a, sample_cd(7, &shape, 200));
        assert!(a.iter().all(|t| t.depth() <= 4));
        assert!(a.iter().all(|t| t.variables().len() <= 3));
        assert!(a.iter().any(|t| t.uses_box()));
        let plain = TermShape {
            quantifiers: false,
            ..shape
        };
        assert!(sample_cd(7, &plain, 200).iter().all(|t| !t.uses_box()));
        assert!(sample_rl(1, &shape, 200).iter().all(|t| t.depth() <= 4));
    }
}
