use std::fmt::Write as _;

use anyhow::Result;
use fano35_core::flagdelta::{formula_fixtures, u_grid, Claim};
use fano35_core::ratcore::int;
use fano35_core::{build_config, chamber_walk, h_profile, s_curve, ConfigKind, PointStratum};

use crate::output::quote;
use crate::Table;

pub fn dump(table: Table, grid: usize, kinds: &[ConfigKind]) -> Result<String> {
    let us = u_grid(&int(1), &int(2), grid);
    let mut out = String::new();
    match table {
        Table::Svalues => {
            out.push_str("config,flag,u,s_d\n");
            for &kind in kinds {
                let cfg = build_config(kind);
                for c in &cfg.curves {
                    for u in &us {
                        writeln!(out, "{kind},{},{u},{}", c.name, s_curve(&cfg, &c.name, u)?)?;
                    }
                }
            }
        }
        Table::Chambers => {
            out.push_str("config,flag,u,v_lo,v_hi,n_support,p2_c0,p2_c1,p2_c2\n");
            for &kind in kinds {
                let cfg = build_config(kind);
                for c in &cfg.curves {
                    for u in &us {
                        for ch in chamber_walk(&cfg, u, &c.name)? {
                            let p = ch.volume_poly(&cfg);
                            writeln!(
                                out,
                                "{kind},{},{u},{},{},{},{},{},{}",
                                c.name,
                                ch.v_lo,
                                ch.v_hi,
                                quote(&ch.support_label()),
                                p.coeff(0),
                                p.coeff(1),
                                p.coeff(2)
                            )?;
                        }
                    }
                }
            }
        }
        Table::Profiles => {
            out.push_str("config,flag,stratum,u,v_lo,v_hi,h_c0,h_c1,h_c2\n");
            for &kind in kinds {
                let cfg = build_config(kind);
                let mut seen = Vec::new();
                for fx in formula_fixtures(kind) {
                    let Claim::SPoint { flag, stratum } = fx.claim else {
                        continue;
                    };
                    if seen.contains(&(flag.clone(), stratum.clone())) {
                        continue;
                    }
                    seen.push((flag.clone(), stratum.clone()));
                    let st = PointStratum::new(stratum.iter().map(String::as_str));
                    for u in &us {
                        for p in h_profile(&cfg, &flag, &st, u)?.pieces() {
                            writeln!(
                                out,
                                "{kind},{flag},{},{u},{},{},{},{},{}",
                                quote(&st.to_string()),
                                p.lo,
                                p.hi,
                                p.poly.coeff(0),
                                p.poly.coeff(1),
                                p.poly.coeff(2)
                            )?;
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}
