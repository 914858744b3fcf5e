//! The intensity collapse C_k(I) for several densities and shape variants,
//! plus the same sweep through the CLI to a CSV file.

use hvi::space::{collapse_value, EPSILON};
use hvi::CollapseVariant;

fn main() {
    let ks = [0.5, 1.0, 2.0, 5.0, 10.0];
    for variant in CollapseVariant::ALL {
        println!("{variant}");
        print!("{:>6}", "I");
        for k in ks {
            print!("{:>10}", format!("k={k}"));
        }
        println!();
        for i in [0.0, 0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 1.0] {
            print!("{i:>6.2}");
            for k in ks {
                print!("{:>10.5}", collapse_value(i, k, variant, EPSILON));
            }
            println!();
        }
    }

    let out = std::env::temp_dir().join("hvi_sweep.csv");
    let code = hvi::cli::run(["hvi", "sweep-k", "--ks", "0.5,1,2,5,10", "--samples", "201", "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0);
}
