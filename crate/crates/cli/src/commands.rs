use std::fmt::Write as _;

use graphlim::density::{anchored_density, density_exact, density_mc};
use graphlim::graphon::BlackBoxKernel;
use graphlim::random::{convergence_experiment, sample_wrandom};
use graphlim::rational::{format_rational, format_sig12};
use graphlim::reduce::{
    build_coupling, find_distinguishing_graph, quotient, twin_reduce, weak_iso, WeakIsoVerdict,
};
use graphlim::spectral::spectrum;

use crate::files::{self, emit, Failure};
use crate::Command;

pub fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Density {
            graph,
            graphon,
            mc,
            seed,
            out,
        } => {
            let f = files::graph(&graph)?;
            let h = files::graphon(&graphon)?;
            let line = match mc {
                Some(samples) => {
                    density_mc(&f, &BlackBoxKernel::from_step(&h), samples, seed)?.to_string()
                }
                None => format_rational(&density_exact(&f, &h)?),
            };
            emit(out.path.as_deref(), &format!("{line}\n"))
        }
        Command::TwinReduce { graphon, out } => {
            let h = files::graphon(&graphon)?;
            emit(out.path.as_deref(), &twin_reduce(&h).to_json())
        }
        Command::WeakIso {
            first,
            second,
            distinguisher_max_nodes,
            out,
        } => {
            let h1 = files::graphon(&first)?;
            let h2 = files::graphon(&second)?;
            let verdict = weak_iso(&h1, &h2);
            let mut text = verdict.to_string();
            if let (WeakIsoVerdict::NotIsomorphic(_), Some(k)) = (&verdict, distinguisher_max_nodes)
            {
                match find_distinguishing_graph(&h1, &h2, k)? {
                    Some(f) => {
                        let (a, b) = (density_exact(&f, &h1)?, density_exact(&f, &h2)?);
                        writeln!(
                            text,
                            "distinguishing graph: {} vs {}",
                            format_rational(&a),
                            format_rational(&b)
                        )?;
                        text.push_str(&f.to_string());
                    }
                    None => writeln!(text, "distinguishing graph: none up to {k} nodes")?,
                }
            }
            emit(out.path.as_deref(), &text)
        }
        Command::Blowup { graphon, k, out } => {
            let h = files::graphon(&graphon)?;
            emit(out.path.as_deref(), &h.blowup(k).to_json())
        }
        Command::Quotient {
            graphon,
            partition,
            out,
        } => {
            let h = files::graphon(&graphon)?;
            let p = files::partition(&partition)?;
            emit(out.path.as_deref(), &quotient(&h, &p)?.to_json())
        }
        Command::Spectrum { graphon, out } => {
            let h = files::graphon(&graphon)?;
            let text: String = spectrum(&h)?
                .eigenvalues
                .iter()
                .map(|&l| format_sig12(l) + "\n")
                .collect();
            emit(out.path.as_deref(), &text)
        }
        Command::Couple { first, second, out } => {
            let h1 = files::graphon(&first)?;
            let h2 = files::graphon(&second)?;
            let c = build_coupling(&h1, &h2).ok_or("graphons are not weakly isomorphic")?;
            emit(out.path.as_deref(), &c.to_json())
        }
        Command::Sample {
            graphon,
            n,
            seed,
            out,
        } => {
            let h = files::graphon(&graphon)?;
            emit(
                out.path.as_deref(),
                &sample_wrandom(&h, n, seed)?.to_string(),
            )
        }
        Command::Converge {
            graphon,
            graph,
            sizes,
            reps,
            seed,
            out,
        } => {
            let h = files::graphon(&graphon)?;
            let f = files::graph(&graph)?;
            let report = convergence_experiment(&h, &f, &sizes, reps, seed)?;
            emit(out.path.as_deref(), &report.to_csv())
        }
        Command::AnchoredDensity {
            graph,
            graphon,
            anchors,
            out,
        } => {
            let f = files::graph(&graph)?;
            let h = files::graphon(&graphon)?;
            let value = anchored_density(&f, &h, &anchors)?;
            emit(
                out.path.as_deref(),
                &format!("{}\n", format_rational(&value)),
            )
        }
    }
}
