use serde::{Deserialize, Serialize};

use super::{CheckpointRunner, HarnessError};
use crate::machines::MachineId;

/// Ordinary least-squares line `y = slope * x + intercept`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearFit {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
}

impl LinearFit {
    /// `None` with fewer than two points or no spread in `xs`.
    pub fn least_squares(xs: &[f64], ys: &[f64]) -> Option<LinearFit> {
        let n = xs.len();
        if n < 2 || n != ys.len() {
            return None;
        }
        let mean_x = xs.iter().sum::<f64>() / n as f64;
        let mean_y = ys.iter().sum::<f64>() / n as f64;
        let sxx: f64 = xs.iter().map(|x| (x - mean_x).powi(2)).sum();
        if sxx == 0.0 {
            return None;
        }
        let sxy: f64 = xs
            .iter()
            .zip(ys)
            .map(|(x, y)| (x - mean_x) * (y - mean_y))
            .sum();
        let slope = sxy / sxx;
        let intercept = mean_y - slope * mean_x;
        let ss_res: f64 = xs
            .iter()
            .zip(ys)
            .map(|(x, y)| (y - (slope * x + intercept)).powi(2))
            .sum();
        let ss_tot: f64 = ys.iter().map(|y| (y - mean_y).powi(2)).sum();
        let r_squared = if ss_tot == 0.0 {
            1.0
        } else {
            1.0 - ss_res / ss_tot
        };
        Some(LinearFit {
            slope,
            intercept,
            r_squared,
        })
    }
}

/// Machine steps spent on each simulated timestep.
///
/// A linear per-timestep cost means quadratic total time.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub machine: MachineId,
    pub per_timestep: Vec<u64>,
    pub cumulative: Vec<u64>,
    /// Per-timestep cost against timestep number `1..=k`.
    pub fit: LinearFit,
}

pub fn profile(id: MachineId, timesteps: u32, cap: u64) -> Result<ProfileReport, HarnessError> {
    if timesteps < 2 || cap == 0 {
        return Err(HarnessError::InvalidArgument(
            "profile needs at least 2 timesteps and a positive cap".into(),
        ));
    }
    let mut runner = CheckpointRunner::new(id);
    let mut per_timestep = Vec::with_capacity(timesteps as usize);
    let mut cumulative = Vec::with_capacity(timesteps as usize);
    for _ in 0..timesteps {
        per_timestep.push(runner.advance(cap)?);
        cumulative.push(runner.config().steps_taken);
    }
    let xs: Vec<f64> = (1..=timesteps).map(f64::from).collect();
    let ys: Vec<f64> = per_timestep.iter().map(|&c| c as f64).collect();
    let fit = LinearFit::least_squares(&xs, &ys).expect("at least two distinct timesteps");
    Ok(ProfileReport {
        machine: id,
        per_timestep,
        cumulative,
        fit,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_line() {
        let fit = LinearFit::least_squares(&[1.0, 2.0, 3.0], &[5.0, 7.0, 9.0]).unwrap();
        assert!((fit.slope - 2.0).abs() < 1e-12);
        assert!((fit.intercept - 3.0).abs() < 1e-12);
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(LinearFit::least_squares(&[1.0], &[1.0]).is_none());
        assert!(LinearFit::least_squares(&[2.0, 2.0], &[1.0, 3.0]).is_none());
        assert_eq!(
            LinearFit::least_squares(&[1.0, 2.0], &[4.0, 4.0])
                .unwrap()
                .r_squared,
            1.0
        );
    }

    #[test]
    fn noisy_fit_below_one() {
        let fit = LinearFit::least_squares(&[1.0, 2.0, 3.0, 4.0], &[1.0, 3.0, 2.0, 4.0]).unwrap();
        // slope 0.8, intercept 0.5, residuals -0.3 0.9 -0.9 0.3
        assert!((fit.slope - 0.8).abs() < 1e-12);
        assert!((fit.r_squared - (1.0 - 1.8 / 5.0)).abs() < 1e-12);
    }

    #[test]
    fn rejects_single_timestep() {
        assert!(matches!(
            profile(MachineId::U33, 1, 100),
            Err(HarnessError::InvalidArgument(_))
        ));
    }
}
