//! Embedded identity records.

use super::{recovered, Group, Raw};

#[rustfmt::skip]
fn raw(
    id: &'static str,
    group: Group,
    anchor: &'static str,
    series: Option<&'static str>,
    closed: Option<&'static str>,
    derivation: Option<&'static str>,
) -> Raw {
    Raw { id, group, anchor, series, closed, derivation, rate: None }
}

#[rustfmt::skip]
pub(super) fn rows() -> [Raw; 105] {
    [
    raw("RT1", Group::Quarter, "motivating series of Ramanujan type 1", Some("z=1/4 upper=[1/3,1,5/3] lower=[7/6,3/2,11/6] num=[2,3] den=[1]"), Some("5/4*pi^1*log2^0*2^0*3^-1/2"), Some("quarter: 1/6,5/6,1/6,5/6,0,0,1")),
    raw("RT2", Group::Quarter, "motivating series of Ramanujan type 2", Some("z=1/4 upper=[3/4,3/2,3/2] lower=[1,13/8,17/8] num=[1,1] den=[1]"), Some("15/16*pi^0*log2^0*2^1/2*3^0"), Some("quarter: 1/4,1/4,1/6,11/12,0,0,5/6")),
    raw("RT3", Group::Quarter, "motivating series of Ramanujan type 3", Some("z=1/4 upper=[1/2,5/6,7/6] lower=[1,4/3,4/3] num=[7,18] den=[1]"), Some("16/3*pi^0*log2^0*2^0*3^1/2"), Some("quarter: 1/6,1/6,1/3,2/3,1/3,0,2/3")),
    raw("RT4", Group::Quarter, "motivating series of Ramanujan type 4", Some("z=1/4 upper=[1/2,4/3,5/3] lower=[1,19/12,25/12] num=[8,9] den=[1]"), Some("91/16*pi^0*log2^0*2^0*3^1/2"), Some("quarter: 1/6,1/2,-5/6,0,0,0,11/6")),
    raw("PM2", Group::Quarter, "motivating pi formula 2", Some("z=1/4 upper=[1/3] lower=[7/6] num=[7,9] den=[2,5,3]"), Some("2*pi^1*log2^0*2^0*3^-1/2"), Some("quarter: 1,2/3,1/3,2/3,2/3,0,4/3")),
    raw("PM5", Group::Quarter, "motivating pi formula 5", Some("z=1/4 upper=[1/4,1/2] lower=[9/8,13/8] num=[23,68,48] den=[3,7,4]"), Some("5/2*pi^1*log2^0*2^0*3^0"), Some("quarter: 3/2,1,1/4,0,0,0,7/4")),
    raw("PM7", Group::Quarter, "motivating pi formula 7", Some("z=1/4 upper=[5/6,5/3] lower=[17/12,23/12] num=[71,174,108] den=[1,7,6]"), Some("165/4*pi^1*log2^0*2^0*3^-1/2"), Some("quarter: 1,1/6,1/2,4/3,1/6,0,2/3")),
    raw("Q1", Group::Quarter, "rate 1/4 family, example 1", Some("z=1/4 upper=[2/3] lower=[11/6] num=[17,42,27] den=[1,4,3]"), Some("10*pi^1*log2^0*2^0*3^-1/2"), Some("quarter: 1/3,1/3,1,1/3,1/3,2/3,1")),
    raw("Q2", Group::Quarter, "rate 1/4 family, example 2", Some("z=1/4 upper=[1/6,1/6,1] lower=[13/12,19/12,11/6] num=[6,19,18] den=[1]"), Some("35/18*pi^1*log2^0*2^0*3^0"), Some("quarter: 1/6,1/6,1/6,1,2/3,2/3,5/6")),
    raw("Q3", Group::Quarter, "rate 1/4 family, example 3", Some("z=1/4 upper=[3/4,3/2] lower=[11/8,15/8] num=[31,76,48] den=[1,5,4]"), Some("21/2*pi^1*log2^0*2^0*3^0"), Some("quarter: 1/2,1/4,3/4,3/2,3/4,0,1/2")),
    raw("Q4", Group::Quarter, "rate 1/4 family, example 4", Some("z=1/4 upper=[1/2,1/2,3/4] lower=[1,9/8,13/8] num=[1,9,12] den=[1]"), Some("5/4*pi^0*log2^0*2^1/2*3^0"), Some("quarter: 1/4,1/4,1/4,0,0,0,3/4")),
    raw("Q5", Group::Quarter, "rate 1/4 family, example 5", Some("z=1/4 upper=[1/2,3/4,5/4] lower=[9/8,15/8,2] num=[17,40,24] den=[1]"), Some("14*pi^0*log2^0*2^1/2*3^0"), Some("quarter: 3/8,5/8,1/8,7/8,0,0,1")),
    raw("Q6", Group::Quarter, "rate 1/4 family, example 6", Some("z=1/4 upper=[7/12,5/6,11/12,7/6] lower=[1,5/4,11/8,15/8] num=[35,135,108] den=[1]"), Some("567/16*pi^0*log2^0*2^1/2*3^0"), Some("quarter: 1/12,5/12,1/4,0,0,0,1")),
    raw("Q7", Group::Quarter, "rate 1/4 family, example 7", Some("z=1/4 upper=[1/4,5/12,3/4,11/12] lower=[5/6,1,13/12,19/12] num=[9,104,144] den=[1]"), Some("28/3*pi^0*log2^0*2^1/2*3^0"), Some("quarter: 1/12,7/12,1/6,0,0,0,5/6")),
    raw("Q8", Group::Quarter, "rate 1/4 family, example 8", Some("z=1/4 upper=[1/6,2/3,5/6,4/3] lower=[1,5/4,3/2,7/4] num=[16,63,54] den=[1]"), Some("81/8*pi^0*log2^0*2^0*3^1/2"), Some("quarter: 1/6,5/6,1/2,0,0,0,1")),
    raw("Q9", Group::Quarter, "rate 1/4 family, example 9", Some("z=1/4 upper=[1/2,1/2,5/6,5/6] lower=[2/3,1,7/6,5/3] num=[3,28,36] den=[1]"), Some("32/9*pi^0*log2^0*2^0*3^1/2"), Some("quarter: 1/6,1/6,1/3,0,0,0,2/3")),
    raw("Q10", Group::Quarter, "rate 1/4 family, example 10", Some("z=1/4 upper=[1/3,1/2,2/3] lower=[1,13/12,19/12] num=[4,39,54] den=[1]"), Some("7/2*pi^0*log2^0*2^0*3^1/2"), Some("quarter: 1/6,1/2,2/3,5/6,0,0,1/6")),
    raw("Q11", Group::Quarter, "rate 1/4 family, example 11", Some("z=1/4 upper=[1/3,5/6,5/3,13/6] lower=[1,7/4,9/4,7/3] num=[65,114,54] den=[1]"), Some("405/7*pi^0*log2^0*2^1/3*3^0"), Some("quarter: 1/6,2/3,-2/3,2/3,0,0,5/3")),
    raw("RT5", Group::NegQuarter, "motivating series of Ramanujan type 5", Some("z=-1/4 upper=[1/8,5/8,3/4] lower=[7/8,1,11/8] num=[9,40] den=[1]"), Some("6*pi^0*log2^0*2^1/2*3^0"), Some("neg-quarter: 1/4,1/2,1/4,1/2")),
    raw("RT6", Group::NegQuarter, "motivating series of Ramanujan type 6", Some("z=-1/4 upper=[-1/8,1/4,3/8] lower=[1,9/8,13/8] num=[7,40] den=[1]"), Some("5*pi^0*log2^0*2^1/2*3^0"), Some("neg-quarter: 3/4,1/2,3/4,1/2")),
    raw("RT7", Group::NegQuarter, "motivating series of Ramanujan type 7", Some("z=-1/4 upper=[1/12,7/12,2/3] lower=[11/12,1,17/12] num=[13,60] den=[1]"), Some("10*pi^0*log2^0*2^1/3*3^0"), Some("neg-quarter: 1/6,1/3,1/2,2/3")),
    raw("PM3", Group::NegQuarter, "motivating pi formula 3", Some("z=-1/4 upper=[4/3] lower=[7/6] num=[16,45,30] den=[2,9,13,6]"), Some("4*pi^1*log2^0*2^0*3^-1/2"), Some("neg-quarter: 1/6,5/6,1/6,7/6")),
    raw("NQ1", Group::NegQuarter, "rate -1/4 family, example 1", Some("z=-1/4 upper=[1/2,1] lower=[4/3,5/3] num=[17,30] den=[1]"), Some("64/3*pi^0*log2^1*2^0*3^0"), Some("neg-quarter: 2/3,1,-1/3,2/3")),
    raw("NQ2", Group::NegQuarter, "rate -1/4 family, example 2", Some("z=-1/4 upper=[1/4,2/3,3/4,5/6] lower=[11/12,1,17/12,3/2] num=[10,51,60] den=[1]"), Some("5*pi^0*log2^0*2^0*3^1/2"), Some("neg-quarter: 1/6,1/3,1/6,2/3")),
    raw("NQ3", Group::NegQuarter, "rate -1/4 family, example 3", Some("z=-1/4 upper=[5/6,4/3] lower=[1,5/3] num=[33,88,60] den=[1]"), Some("32/3*pi^0*log2^0*2^1/3*3^0"), Some("neg-quarter: 1/6,1/2,-5/6,5/6")),
    raw("NQ4", Group::NegQuarter, "rate -1/4 family, example 4", Some("z=-1/4 upper=[-1/12,1/6,5/12,2/3] lower=[3/4,1,5/4,3/2] num=[11,174,360] den=[1]"), Some("9*pi^0*log2^0*2^1/3*3^0"), Some("neg-quarter: 1/6,2/3,1/2,1/3")),
    raw("N27-PAIR-A", Group::Neg27, "rate -1/27 pair, first member", Some("z=-1/27 upper=[-1/4,5/4,5/4] lower=[1,13/12,17/12] num=[5,28] den=[1]"), Some("15/4*pi^0*log2^0*2^1/2*3^0"), Some("neg-27: 1/4,3/4,0,3/4,1/2")),
    raw("PM4", Group::Neg27, "motivating pi formula 4", Some("z=-1/27 upper=[1/8,1/4,5/8,1] lower=[13/12,11/8,17/12,15/8] num=[44,305,688,448] den=[1]"), Some("315/16*pi^1*log2^0*2^-1/2*3^0"), Some("neg-27: 3/4,1/4,-1/2,0,3/4")),
    raw("PM8", Group::Neg27, "motivating pi formula 8", Some("z=-1/27 upper=[1/2,2/3,1] lower=[4/3,4/3,11/6] num=[7,26,21] den=[1]"), Some("15/4*pi^1*log2^0*2^0*3^-1/2"), Some("neg-27: 1/3,2/3,1,1/3,1/3")),
    raw("N27-1", Group::Neg27, "rate -1/27 family, example 1", Some("z=-1/27 upper=[3/8,3/4,7/8,1] lower=[9/8,19/12,13/8,23/12] num=[164,697,976,448] den=[1]"), Some("1155/16*pi^1*log2^0*2^-1/2*3^0"), Some("neg-27: 1/4,1/2,3/4,0,1/4")),
    raw("N27-2", Group::Neg27, "rate -1/27 family, example 2", Some("z=-1/27 upper=[1/2,1/2,1/2,1,1,1] lower=[5/4,5/4,4/3,5/3,7/4,7/4] num=[136,919,2232,2336,896] den=[1]"), Some("27/2*pi^2*log2^0*2^0*3^0"), Some("neg-27: 1/2,1/2,1/2,0,1/2")),
    raw("N27-3", Group::Neg27, "rate -1/27 family, example 3", Some("z=-1/27 upper=[1/2,1] lower=[4/3,5/3] num=[17,28] den=[1]"), Some("24*pi^0*log2^1*2^0*3^0"), Some("neg-27: 1/2,0,-1/2,0,1")),
    raw("N27-4", Group::Neg27, "rate -1/27 family, example 4", Some("z=-1/27 upper=[1/2,1/2] lower=[4/3,5/3] num=[201,1268,2824,2656,896] den=[3,19,32,16]"), Some("96*pi^0*log2^1*2^0*3^0"), Some("neg-27: 1,1/2,1,0,1/2")),
    raw("N27-5", Group::Neg27, "rate -1/27 family, example 5", Some("z=-1/27 upper=[1/2,1/2] lower=[7/6,11/6] num=[21,48,28] den=[1,1]"), Some("30*pi^0*log2^1*2^0*3^0"), Some("neg-27: 1,0,0,1/2,1")),
    raw("N27-6", Group::Neg27, "rate -1/27 family, example 6", Some("z=-1/27 upper=[1/4,1/4,3/4] lower=[1,13/12,17/12] num=[11,124,224] den=[1]"), Some("15/2*pi^0*log2^0*2^1/2*3^0"), Some("neg-27: 1/4,1/4,1/2,0,1/4")),
    raw("N27-7", Group::Neg27, "rate -1/27 family, example 7", Some("z=-1/27 upper=[3/8,5/8,3/4,7/8,9/8] lower=[1,7/6,3/2,3/2,11/6] num=[1395,7472,12928,7168] den=[1]"), Some("960*pi^0*log2^0*2^1/2*3^0"), Some("neg-27: 1/4,1/2,0,1/4,1/2")),
    raw("N27-8", Group::Neg27, "rate -1/27 family, example 8", Some("z=-1/27 upper=[1/2,5/6,4/3,4/3] lower=[1,25/18,31/18,37/18] num=[32,75,42] den=[1]"), Some("1729/96*pi^0*log2^0*2^0*3^1/2"), Some("neg-27: 1/6,0,5/6,0,1/2")),
    raw("N27-9", Group::Neg27, "rate -1/27 family, example 9", Some("z=-1/27 upper=[1/3,1/3,2/3,5/6] lower=[1,10/9,13/9,16/9] num=[37,396,1035,756] den=[1]"), Some("28*pi^0*log2^0*2^1/3*3^0"), Some("neg-27: 1/6,1/6,1/3,0,1/3")),
    raw("PM6", Group::Four27, "motivating pi formula 6", Some("z=4/27 upper=[1,1/2,1/2,1/2] lower=[7/6,5/4,7/4,11/6] num=[32,193,338,184] den=[1]"), Some("45/4*pi^1*log2^0*2^0*3^0"), Some("four-27: 1/2,1/2,-1/2,1")),
    raw("F427-1", Group::Four27, "rate 4/27 family, example 1", Some("z=4/27 upper=[7/12,11/12,13/12,17/12] lower=[1,13/8,17/8,9/4] num=[16796,55923,58788,19872] den=[1]"), Some("885735/64*pi^0*log2^0*2^1/2*3^0"), Some("four-27: 1/12,5/12,1/4,1")),
    raw("F427-2", Group::Four27, "rate 4/27 family, example 2", Some("z=4/27 upper=[3/8,3/8,1/2,7/8,7/8] lower=[3/4,1,13/12,17/12,7/4] num=[45,618,1840,1472] den=[1]"), Some("45*pi^0*log2^0*2^1/2*3^0"), Some("four-27: 1/4,1/4,-1/2,3/4")),
    raw("F427-3", Group::Four27, "rate 4/27 family, example 3", Some("z=4/27 upper=[3/4,3/4,3/4,5/4,5/4] lower=[1,11/8,17/12,15/8,25/12] num=[300,1309,1748,736] den=[1]"), Some("4095/16*pi^0*log2^0*2^1/2*3^0"), Some("four-27: 1/4,1/4,-1/4,1")),
    raw("F427-4", Group::Four27, "rate 4/27 family, example 4", Some("z=4/27 upper=[5/12,7/12,11/12,13/12] lower=[1,9/8,5/4,13/8] num=[260,1449,1656] den=[1]"), Some("3645/16*pi^0*log2^0*2^1/2*3^0"), Some("four-27: 1/12,5/12,-3/4,1")),
    raw("F427-5", Group::Four27, "rate 4/27 family, example 5", Some("z=4/27 upper=[3/8,5/8,7/8,9/8] lower=[1,7/6,3/2,11/6] num=[315,984,736] den=[1]"), Some("240*pi^0*log2^0*2^1/2*3^0"), Some("four-27: 1/4,3/4,-1/2,1")),
    raw("F427-6", Group::Four27, "rate 4/27 family, example 6", Some("z=4/27 upper=[1/6,5/6,4/3,5/3] lower=[1,3/2,7/4,9/4] num=[640,1521,828] den=[1]"), Some("98415/256*pi^0*log2^0*2^0*3^1/2"), Some("four-27: 1/6,5/6,1/2,1")),
    raw("F427-7", Group::Four27, "rate 4/27 family, example 7", Some("z=4/27 upper=[5/12,5/12,1/2,11/12,11/12] lower=[2/3,1,10/9,13/9,16/9] num=[109,1510,4320,3312] den=[1]"), Some("896/9*pi^0*log2^0*2^0*3^1/2"), Some("four-27: 1/6,1/6,-1/3,2/3")),
    raw("F427-8", Group::Four27, "rate 4/27 family, example 8", Some("z=4/27 upper=[3/4,3/4,5/6,5/4,5/4] lower=[1,4/3,13/9,16/9,19/9] num=[1215,5494,7632,3312] den=[1]"), Some("71680/81*pi^0*log2^0*2^0*3^1/2"), Some("four-27: 1/6,1/6,-1/3,1")),
    raw("F427-9", Group::Four27, "rate 4/27 family, example 9", Some("z=4/27 upper=[1/3,5/12,2/3,11/12] lower=[1,10/9,13/9,16/9] num=[26,303,828,621] den=[1]"), Some("28*pi^0*log2^0*2^1/3*3^0"), Some("four-27: 1/6,1/3,-2/3,5/6")),
    raw("F427-10", Group::Four27, "rate 4/27 family, example 10", Some("z=4/27 upper=[1/3,1/3,7/12,5/6,13/12] lower=[1,7/6,7/6,3/2,5/3] num=[91,738,1728,1242] den=[1]"), Some("81*pi^0*log2^0*2^1/3*3^0"), Some("four-27: 2/3,1/6,-2/3,1")),
    raw("S1627-1", Group::Sixteen27, "rate 16/27 family, example 1", Some("z=16/27 upper=[3/8,5/8,7/8,9/8] lower=[1,4/3,5/3,5/2] num=[321,1564,2096,704] den=[1]"), Some("384*pi^0*log2^0*2^1/2*3^0"), Some("sixteen-27-a: -1,1/2,1/2")),
    raw("S1627-2", Group::Sixteen27, "rate 16/27 family, example 2", Some("z=16/27 upper=[7/12,5/6,13/12] lower=[1,7/3,5/3] num=[113,237,99] den=[1]"), Some("144*pi^0*log2^0*2^1/3*3^0"), Some("sixteen-27-a: -1/3,1/3,1/3")),
    raw("S1627-3", Group::Sixteen27, "rate 16/27 family, example 3", Some("z=16/27 upper=[-3/4,5/8,7/8,9/8,11/8] lower=[1,5/4,4/3,5/3,5/2] num=[633,2252,2416,704] den=[1]"), Some("192*pi^0*log2^0*2^1/2*3^0"), Some("sixteen-27-b: 1/4,1/4,1/2")),
    raw("S1627-4", Group::Sixteen27, "rate 16/27 family, example 4", Some("z=16/27 upper=[-7/6,7/12,13/12] lower=[1/3,2/3,1] num=[133,66] den=[4,3]"), Some("-14*pi^0*log2^0*2^1/3*3^0"), Some("sixteen-27-b: -1/3,1/3,1/3")),
    raw("RT8", Group::Sixty4, "motivating series of Ramanujan type 8", Some("z=1/64 upper=[-1/6,7/6,3/2] lower=[1,4/3,5/3] num=[11,14] den=[1]"), Some("512/81*pi^0*log2^0*2^0*3^1/2"), Some("sixty4-b: -2/3,-1/3,-1,5/6")),
    raw("PM1", Group::Sixty4, "motivating pi formula 1", Some("z=1/64 upper=[1,1] lower=[5/4,7/4] num=[118,297,189] den=[2,9,9]"), Some("6*pi^2*log2^0*2^0*3^0"), Some("sixty4-a: 1,1/2,1/2,1/2")),
    raw("PM9", Group::Sixty4, "motivating pi formula 9", Some("z=1/64 upper=[1/2,1,1,1] lower=[5/4,5/4,7/4,7/4] num=[22,61,42] den=[1]"), Some("9/4*pi^2*log2^0*2^0*3^0"), Some("sixty4-b: 1/2,1/2,0,1/2")),
    raw("S64-1", Group::Sixty4, "rate 1/64 family, example 1", Some("z=1/64 upper=[1/4,1/2,3/4,1] lower=[9/8,11/8,13/8,15/8] num=[82,411,656,336] den=[1]"), Some("105/4*pi^1*log2^0*2^0*3^0"), Some("sixty4-a: 1/2,1/4,3/4,1/4")),
    raw("S64-2", Group::Sixty4, "rate 1/64 family, example 2", Some("z=1/64 upper=[1/3,1/3,1,1,1,5/3,5/3] lower=[7/6,7/6,3/2,3/2,3/2,11/6,11/6] num=[46,231,369,189] den=[1]"), Some("75/16*pi^2*log2^0*2^0*3^0"), Some("sixty4-a: 1/2,3/4,3/4,1/4")),
    raw("S64-3", Group::Sixty4, "rate 1/64 family, example 3", Some("z=1/64 upper=[1/6,1/3,5/6,1,5/3] lower=[13/12,17/12,3/2,19/12,23/12] num=[58,303,492,252] den=[1]"), Some("385/12*pi^1*log2^0*2^0*3^-1/2"), Some("sixty4-b: -5/6,0,-2/3,1")),
    raw("S64-4", Group::Sixty4, "rate 1/64 family, example 4", Some("z=1/64 upper=[-3/4,-1/2,1/4,3/4,7/4] lower=[3/8,7/8,1,9/8,13/8] num=[-17,-70,304,672] den=[1]"), Some("-10*pi^0*log2^0*2^1/2*3^0"), Some("sixty4-b: -3/4,1/2,-1,1/4")),
    raw("S64-5", Group::Sixty4, "rate 1/64 family, example 5", Some("z=1/64 upper=[1/6,1/3,2/3,5/6] lower=[1,5/4,3/2,7/4] num=[203,1557,3420,2268] den=[1]"), Some("162*pi^0*log2^0*2^1/3*3^0"), Some("sixty4-b: -2/3,-1/6,-1/2,5/6")),
    raw("S2764-1", Group::TwentySeven64, "rate 27/64 family, example 1", Some("z=27/64 upper=[1/2,1/2,1/2,5/6,1,7/6] lower=[5/4,5/4,11/8,7/4,7/4,15/8] num=[120,753,1700,1656,592] den=[1]"), Some("189/4*pi^1*log2^0*2^0*3^0"), Some("twenty7-64: 3/8,0,3/8,1/2")),
    raw("S2764-2", Group::TwentySeven64, "rate 27/64 family, example 2", Some("z=27/64 upper=[5/6,7/6] lower=[5/4,7/4] num=[111,256,148] den=[1,3,2]"), Some("192*pi^0*log2^1*2^0*3^0"), Some("twenty7-64: 1,0,0,1/2")),
    raw("S2764-3", Group::TwentySeven64, "rate 27/64 family, example 3", Some("z=27/64 upper=[1,4/3,5/3] lower=[7/4,2,9/4] num=[69,101,37] den=[3,2]"), Some("30*pi^0*log2^0*2^0*3^0"), Some("twenty7-64: 0,0,1,1")),
    raw("FR-1", Group::ExtraRate, "further rates, example 1", Some("z=-1/64 upper=[1,10/9,13/9,3/2,5/3,16/9] lower=[7/6,14/9,7/4,17/9,20/9,9/4] num=[780,2155,1956,585] den=[1]"), Some("8800/21*pi^1*log2^0*2^0*3^-1/2"), Some("neg-64: -2/3,2/3,0,2/3")),
    raw("FR-2", Group::ExtraRate, "further rates, example 2", Some("z=27/32 upper=[1,4/3,5/3] lower=[7/4,9/4,5/2] num=[12,16,5] den=[1]"), Some("45/4*pi^1*log2^0*2^0*3^0"), Some("twenty7-32: 1,1/2,1/2")),
    raw("RAMANUJAN-1", Group::Background, "classical Ramanujan 1/pi series, rate 1/4", Some("z=1/4 upper=[1/2,1/2,1/2] lower=[1,1,1] num=[1,6] den=[1]"), Some("4*pi^-1*log2^0*2^0*3^0"), None),
    raw("RAMANUJAN-2", Group::Background, "classical Ramanujan 1/pi series, rate -1/4", Some("z=-1/4 upper=[1/4,1/2,3/4] lower=[1,1,1] num=[3,20] den=[1]"), Some("8*pi^-1*log2^0*2^0*3^0"), None),
    raw("RAMANUJAN-3", Group::Background, "classical Ramanujan 1/pi series, rate 1/64", Some("z=1/64 upper=[1/2,1/2,1/2] lower=[1,1,1] num=[5,42] den=[1]"), Some("16*pi^-1*log2^0*2^0*3^0"), None),
    raw("CHU-1", Group::Background, "background Chu series 1", Some("z=2/27 upper=[1/2,1/2,1/2] lower=[5/6,1,7/6] num=[1,5] den=[1]"), Some("3/4*pi^0*log2^0*2^1/2*3^0"), None),
    raw("CHU-2", Group::Background, "background Chu series 2", Some("z=2/27 upper=[1,1,1] lower=[3/2,4/3,5/3] num=[7,10] den=[1]"), Some("3/4*pi^2*log2^0*2^0*3^0"), None),
    raw("CHU-3", Group::Background, "background Chu series 3", Some("z=-1/27 upper=[1/3,2/3,1/6] lower=[1,1,1] num=[2,21] den=[1]"), Some("9*pi^-1*log2^0*2^-4/3*3^1/2"), None),
    raw("CHU-4", Group::Background, "background Chu series 4", Some("z=-1/27 upper=[1/3,2/3,5/6] lower=[1,1,1] num=[5,42] den=[1]"), Some("27*pi^-1*log2^0*2^-5/3*3^1/2"), None),
    raw("CHU-5", Group::Background, "background Chu series 5", Some("z=1/9 upper=[1,3/4,5/4] lower=[3/2,3/2,3/2] num=[5,8] den=[1]"), Some("1*pi^1*log2^0*2^0*3^1/2"), None),
    raw("CHU-6", Group::Background, "background Chu series 6", Some("z=2/27 upper=[1,1,1] lower=[3/2,4/3,5/3] num=[7,10] den=[1]"), Some("3/4*pi^2*log2^0*2^0*3^0"), None),
    raw("GUILLERA-QUARTER", Group::Background, "background WZ series for pi^2/4", Some("z=1/4 upper=[1,1,1] lower=[3/2,3/2,3/2] num=[2,3] den=[1]"), Some("1/4*pi^2*log2^0*2^0*3^0"), Some("quarter: 1/2,1/2,1/2,1/2,0,0,1")),
    raw("N27-PAIR-B", Group::Background, "rate -1/27 pair, second member", Some("z=-1/27 upper=[1/4,1/4,3/4] lower=[1,13/12,17/12] num=[11,124,224] den=[1]"), Some("15/2*pi^0*log2^0*2^1/2*3^0"), None),
    recovered("Q-R1", Group::Quarter, "rate 1/4 family, recovered tuple 1", "quarter: 1/3,1/3,1/3,0,0,0,1", "1/4"),
    recovered("Q-R2", Group::Quarter, "rate 1/4 family, recovered tuple 2", "quarter: 2/3,2/3,2/3,0,0,0,1", "1/4"),
    recovered("Q-R3", Group::Quarter, "rate 1/4 family, recovered tuple 3", "quarter: 1/2,1,1/2,1/2,0,0,1", "1/4"),
    recovered("Q-R4", Group::Quarter, "rate 1/4 family, recovered tuple 4", "quarter: 1/4,1/4,0,1,1/4,1/4,1", "1/4"),
    recovered("Q-R5", Group::Quarter, "rate 1/4 family, recovered tuple 5", "quarter: 3/4,3/4,3/4,0,0,0,1", "1/4"),
    recovered("Q-R6", Group::Quarter, "rate 1/4 family, recovered tuple 6", "quarter: 1/4,1/4,-1/4,0,0,0,5/4", "1/4"),
    recovered("Q-R7", Group::Quarter, "rate 1/4 family, recovered tuple 7", "quarter: 3/4,3/4,-3/4,0,0,0,7/4", "1/4"),
    recovered("Q-R8", Group::Quarter, "rate 1/4 family, recovered tuple 8", "quarter: 2/3,2/3,-2/3,0,0,0,5/3", "1/4"),
    recovered("Q-R9", Group::Quarter, "rate 1/4 family, recovered tuple 9", "quarter: 1/3,1/6,5/6,1/2,1/6,0,1/2", "1/4"),
    recovered("N27-R1", Group::Neg27, "rate -1/27 family, recovered tuple 1", "neg-27: 1,0,0,0,1", "-1/27"),
    recovered("N27-R2", Group::Neg27, "rate -1/27 family, recovered tuple 2", "neg-27: 1,0,-1/2,0,1", "-1/27"),
    recovered("N27-R3", Group::Neg27, "rate -1/27 family, recovered tuple 3", "neg-27: 1/2,0,1/2,0,1/2", "-1/27"),
    recovered("N27-R4", Group::Neg27, "rate -1/27 family, recovered tuple 4", "neg-27: 1,1/2,1/2,0,1/2", "-1/27"),
    recovered("N27-R5", Group::Neg27, "rate -1/27 family, recovered tuple 5", "neg-27: 1/2,1/2,1/2,1/2,1/2", "-1/27"),
    recovered("N27-R6", Group::Neg27, "rate -1/27 family, recovered tuple 6", "neg-27: 1/3,1/3,2/3,0,1/3", "-1/27"),
    recovered("N27-R7", Group::Neg27, "rate -1/27 family, recovered tuple 7", "neg-27: 1/3,0,1/3,0,2/3", "-1/27"),
    recovered("N27-R8", Group::Neg27, "rate -1/27 family, recovered tuple 8", "neg-27: 2/3,2/3,1,0,1/3", "-1/27"),
    recovered("S1627-R1", Group::Sixteen27, "rate 16/27 family, recovered tuple 1", "sixteen-27-a: 1/2,1/2,1/2", "16/27"),
    recovered("S64-R1", Group::Sixty4, "rate 1/64 family, recovered tuple 1", "sixty4-b: 0,0,-1,1/2", "1/64"),
    recovered("S64-R2", Group::Sixty4, "rate 1/64 family, recovered tuple 2", "sixty4-b: 0,0,0,1", "1/64"),
    recovered("S64-R3", Group::Sixty4, "rate 1/64 family, recovered tuple 3", "sixty4-b: -2/3,0,-1/3,1", "1/64"),
    recovered("S64-R4", Group::Sixty4, "rate 1/64 family, recovered tuple 4", "sixty4-b: 1/2,0,0,1/2", "1/64"),
    recovered("S64-R5", Group::Sixty4, "rate 1/64 family, recovered tuple 5", "sixty4-b: -2/3,1/6,-1,5/6", "1/64"),
    recovered("S64-R6", Group::Sixty4, "rate 1/64 family, recovered tuple 6", "sixty4-b: -2/3,1/3,-2/3,5/6", "1/64"),
    recovered("S64-R7", Group::Sixty4, "rate 1/64 family, recovered tuple 7", "sixty4-b: 1/3,1/3,-2/3,1/3", "1/64"),
    recovered("S64-R8", Group::Sixty4, "rate 1/64 family, recovered tuple 8", "sixty4-b: -1/2,1/4,-1,3/4", "1/64"),
    recovered("S64-R9", Group::Sixty4, "rate 1/64 family, recovered tuple 9", "sixty4-b: -1/2,1/2,-1/2,3/4", "1/64"),
    recovered("S2764-R1", Group::TwentySeven64, "rate 27/64 family, recovered tuple 1", "twenty7-64: 1/4,0,1/4,1", "27/64"),
    ]
}
