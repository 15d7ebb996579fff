//! Published tables, transcribed verbatim. Ties are listed in the order printed.

/// `(s, M(3,s), maximal sets (a2, a3))`.
pub type T700Row = (i64, i64, &'static [(i64, i64)]);

pub const T700: &[T700Row] = &[
    (1, 3, &[(2, 3)]),
    (2, 8, &[(3, 4)]),
    (3, 15, &[(4, 5)]),
    (4, 26, &[(5, 8)]),
    (5, 35, &[(6, 7)]),
    (6, 52, &[(7, 12)]),
    (7, 69, &[(8, 13)]),
    (8, 89, &[(9, 14)]),
    (9, 112, &[(9, 20)]),
    (10, 146, &[(10, 26)]),
    (11, 172, &[(9, 30), (10, 26)]),
    (12, 212, &[(11, 37)]),
    (13, 259, &[(13, 34)]),
    (14, 302, &[(12, 52)]),
    (15, 354, &[(12, 52)]),
    (16, 418, &[(15, 54)]),
    (17, 476, &[(14, 61)]),
    (18, 548, &[(15, 80)]),
    (19, 633, &[(18, 65)]),
    (20, 714, &[(17, 91)]),
    (21, 805, &[(17, 91)]),
    (22, 902, &[(19, 102), (20, 92)]),
];

/// Longest `SG(n,p)` for `p = 1, 2, 3`, with the order-2/3 limit columns.
pub struct T503Row {
    pub n: i64,
    pub orders: [&'static [(i64, i64)]; 3],
    pub limit2: f64,
    pub limit3: f64,
}

pub const T503: &[T503Row] = &[
    T503Row { n: 1, orders: [&[(3, 4)], &[(4, 5)], &[(5, 6)]], limit2: 9.82, limit3: 15.23 },
    T503Row { n: 2, orders: [&[(5, 7)], &[(7, 9)], &[(9, 11)]], limit2: 14.00, limit3: 20.31 },
    T503Row { n: 3, orders: [&[(7, 10)], &[(10, 13), (8, 13)], &[(13, 16)]], limit2: 18.82, limit3: 26.00 },
    T503Row { n: 4, orders: [&[(6, 14)], &[(11, 18)], &[(17, 21)]], limit2: 24.29, limit3: 32.31 },
    T503Row { n: 5, orders: [&[(8, 19)], &[(14, 23)], &[(21, 26), (15, 26)]], limit2: 30.39, limit3: 39.23 },
    T503Row { n: 6, orders: [&[(10, 24)], &[(17, 28)], &[(19, 33)]], limit2: 37.14, limit3: 46.77 },
    T503Row { n: 7, orders: [&[(9, 30)], &[(15, 34), (13, 34)], &[(23, 40)]], limit2: 44.54, limit3: 54.92 },
    T503Row { n: 8, orders: [&[(11, 37)], &[(16, 42)], &[(27, 47)]], limit2: 52.57, limit3: 63.69 },
    T503Row { n: 9, orders: [&[(13, 44)], &[(19, 50)], &[(31, 54)]], limit2: 61.25, limit3: 73.08 },
    T503Row { n: 10, orders: [&[(12, 52)], &[(22, 58)], &[(28, 62)]], limit2: 70.57, limit3: 83.08 },
    T503Row { n: 11, orders: [&[(14, 61)], &[(25, 66)], &[(32, 71), (26, 71)]], limit2: 80.54, limit3: 93.69 },
    T503Row { n: 12, orders: [&[(16, 70)], &[(21, 76)], &[(30, 82)]], limit2: 91.14, limit3: 104.92 },
    T503Row { n: 13, orders: [&[(15, 80)], &[(24, 87)], &[(34, 93)]], limit2: 102.39, limit3: 116.77 },
    T503Row { n: 14, orders: [&[(17, 91)], &[(27, 98)], &[(38, 104)]], limit2: 114.29, limit3: 129.23 },
    T503Row { n: 15, orders: [&[(19, 102)], &[(30, 109)], &[(42, 115)]], limit2: 126.82, limit3: 142.31 },
    T503Row { n: 16, orders: [&[(18, 114)], &[(33, 120), (26, 120)], &[(46, 126)]], limit2: 140.00, limit3: 156.00 },
    T503Row { n: 17, orders: [&[(20, 127)], &[(29, 134)], &[(43, 138), (37, 138)]], limit2: 153.82, limit3: 170.31 },
    T503Row { n: 18, orders: [&[(22, 140)], &[(32, 148)], &[(41, 153)]], limit2: 168.29, limit3: 185.23 },
    T503Row { n: 19, orders: [&[(21, 154)], &[(35, 162)], &[(45, 168)]], limit2: 183.39, limit3: 200.77 },
    T503Row { n: 20, orders: [&[(23, 169)], &[(38, 176)], &[(49, 183)]], limit2: 199.14, limit3: 216.92 },
    T503Row { n: 21, orders: [&[(25, 184)], &[(34, 191)], &[(53, 198)]], limit2: 215.54, limit3: 233.69 },
    T503Row { n: 22, orders: [&[(24, 200)], &[(37, 208)], &[(57, 213)]], limit2: 232.57, limit3: 251.08 },
    T503Row { n: 23, orders: [&[(26, 217)], &[(40, 225)], &[(61, 228)]], limit2: 250.25, limit3: 269.08 },
    T503Row { n: 24, orders: [&[(28, 234)], &[(43, 242)], &[(52, 246)]], limit2: 268.57, limit3: 287.69 },
    T503Row { n: 25, orders: [&[(27, 252)], &[(46, 259)], &[(56, 265)]], limit2: 287.54, limit3: 306.92 },
    T503Row { n: 26, orders: [&[(29, 271)], &[(42, 278)], &[(60, 284)]], limit2: 307.14, limit3: 326.77 },
    T503Row { n: 27, orders: [&[(31, 290)], &[(45, 298)], &[(64, 303)]], limit2: 327.39, limit3: 347.23 },
    T503Row { n: 28, orders: [&[(30, 310)], &[(48, 318)], &[(68, 322)]], limit2: 348.29, limit3: 368.31 },
    T503Row { n: 29, orders: [&[(32, 331)], &[(51, 338)], &[(72, 341)]], limit2: 369.82, limit3: 390.00 },
    T503Row { n: 30, orders: [&[(34, 352)], &[(54, 358), (47, 358)], &[(63, 361)]], limit2: 392.00, limit3: 412.31 },
    T503Row { n: 31, orders: [&[(33, 374)], &[(50, 381)], &[(67, 384)]], limit2: 414.82, limit3: 435.23 },
    T503Row { n: 32, orders: [&[(35, 397)], &[(53, 404)], &[(71, 407)]], limit2: 438.29, limit3: 458.77 },
    T503Row { n: 33, orders: [&[(37, 420)], &[(56, 427)], &[(75, 430)]], limit2: 462.39, limit3: 482.92 },
    T503Row { n: 34, orders: [&[(36, 444)], &[(59, 450)], &[(79, 453)]], limit2: 487.14, limit3: 507.69 },
    T503Row { n: 35, orders: [&[(38, 469)], &[(55, 474)], &[(83, 476)]], limit2: 512.54, limit3: 533.08 },
    T503Row { n: 36, orders: [&[(40, 494)], &[(58, 500)], &[(87, 499)]], limit2: 538.57, limit3: 559.08 },
    T503Row { n: 37, orders: [&[(39, 520)], &[(61, 526)], &[(78, 525)]], limit2: 565.25, limit3: 585.69 },
    T503Row { n: 38, orders: [&[(41, 547)], &[(64, 552)], &[(82, 552)]], limit2: 592.57, limit3: 612.92 },
    T503Row { n: 39, orders: [&[(43, 574)], &[(67, 578)], &[(86, 579)]], limit2: 620.54, limit3: 640.77 },
    T503Row { n: 40, orders: [&[(42, 602)], &[(63, 606)], &[(90, 606)]], limit2: 649.14, limit3: 669.23 },
    T503Row { n: 41, orders: [&[(44, 631)], &[(66, 635)], &[(94, 633)]], limit2: 678.39, limit3: 698.31 },
    T503Row { n: 42, orders: [&[(46, 660)], &[(69, 664)], &[(98, 660)]], limit2: 708.29, limit3: 728.00 },
    T503Row { n: 43, orders: [&[(45, 690)], &[(72, 693)], &[(89, 688)]], limit2: 738.82, limit3: 758.31 },
    T503Row { n: 44, orders: [&[(47, 721)], &[(75, 722), (68, 722)], &[(93, 719)]], limit2: 770.00, limit3: 789.23 },
    T503Row { n: 45, orders: [&[(49, 752)], &[(71, 754)], &[(97, 750)]], limit2: 801.82, limit3: 820.77 },
    T503Row { n: 46, orders: [&[(48, 784)], &[(74, 786)], &[(101, 781)]], limit2: 834.29, limit3: 852.92 },
    T503Row { n: 47, orders: [&[(50, 817)], &[(77, 818)], &[(105, 812)]], limit2: 867.39, limit3: 885.69 },
    T503Row { n: 48, orders: [&[(52, 850)], &[(80, 850)], &[(109, 843)]], limit2: 901.14, limit3: 919.08 },
    T503Row { n: 49, orders: [&[(51, 884)], &[(76, 883)], &[(113, 874)]], limit2: 935.54, limit3: 953.08 },
    T503Row { n: 50, orders: [&[(53, 919)], &[(79, 918)], &[(104, 908)]], limit2: 970.57, limit3: 987.69 },
    T503Row { n: 51, orders: [&[(55, 954)], &[(82, 953)], &[(108, 943)]], limit2: 1006.25, limit3: 1022.92 },
    T503Row { n: 52, orders: [&[(54, 990)], &[(85, 988)], &[(112, 978)]], limit2: 1042.57, limit3: 1058.77 },
    T503Row { n: 53, orders: [&[(56, 1027)], &[(88, 1023)], &[(116, 1013)]], limit2: 1079.54, limit3: 1095.23 },
    T503Row { n: 54, orders: [&[(58, 1064)], &[(84, 1060)], &[(120, 1048)]], limit2: 1117.14, limit3: 1132.31 },
    T503Row { n: 55, orders: [&[(57, 1102)], &[(87, 1098)], &[(124, 1083)]], limit2: 1155.39, limit3: 1170.00 },
    T503Row { n: 56, orders: [&[(59, 1141)], &[(90, 1136)], &[(115, 1119)]], limit2: 1194.29, limit3: 1208.31 },
    T503Row { n: 57, orders: [&[(61, 1180)], &[(93, 1174)], &[(119, 1158)]], limit2: 1233.82, limit3: 1247.23 },
    T503Row { n: 58, orders: [&[(60, 1220)], &[(96, 1212), (89, 1212)], &[(123, 1197)]], limit2: 1274.00, limit3: 1286.77 },
    T503Row { n: 59, orders: [&[(62, 1261)], &[(92, 1253)], &[(127, 1236)]], limit2: 1314.82, limit3: 1326.92 },
    T503Row { n: 60, orders: [&[(64, 1302)], &[(95, 1294)], &[(131, 1275)]], limit2: 1356.29, limit3: 1367.69 },
    T503Row { n: 61, orders: [&[(63, 1344)], &[(98, 1335)], &[(135, 1314)]], limit2: 1398.39, limit3: 1409.08 },
    T503Row { n: 62, orders: [&[(65, 1387)], &[(101, 1376)], &[(139, 1353)]], limit2: 1441.14, limit3: 1451.08 },
    T503Row { n: 63, orders: [&[(67, 1430)], &[(97, 1418)], &[(130, 1395)]], limit2: 1484.54, limit3: 1493.69 },
    T503Row { n: 64, orders: [&[(66, 1474)], &[(100, 1462)], &[(134, 1438)]], limit2: 1528.57, limit3: 1536.92 },
    T503Row { n: 65, orders: [&[(68, 1519)], &[(103, 1506)], &[(138, 1481)]], limit2: 1573.25, limit3: 1580.77 },
    T503Row { n: 66, orders: [&[(70, 1564)], &[(106, 1550)], &[(142, 1524)]], limit2: 1618.57, limit3: 1625.23 },
    T503Row { n: 67, orders: [&[(69, 1610)], &[(109, 1594)], &[(146, 1567)]], limit2: 1664.54, limit3: 1670.31 },
    T503Row { n: 68, orders: [&[(71, 1657)], &[(105, 1640)], &[(150, 1610)]], limit2: 1711.14, limit3: 1716.00 },
    T503Row { n: 69, orders: [&[(73, 1704)], &[(108, 1687)], &[(141, 1654)]], limit2: 1758.39, limit3: 1762.31 },
    T503Row { n: 70, orders: [&[(72, 1752)], &[(111, 1734)], &[(145, 1701)]], limit2: 1806.29, limit3: 1809.23 },
    T503Row { n: 71, orders: [&[(74, 1801)], &[(114, 1781)], &[(149, 1748)]], limit2: 1854.82, limit3: 1856.77 },
    T503Row { n: 72, orders: [&[(76, 1850)], &[(117, 1828), (110, 1828)], &[(153, 1795)]], limit2: 1904.00, limit3: 1904.92 },
    T503Row { n: 73, orders: [&[(75, 1900)], &[(113, 1878)], &[(157, 1842)]], limit2: 1953.82, limit3: 1953.69 },
    T503Row { n: 74, orders: [&[(77, 1951)], &[(116, 1928)], &[(161, 1889)]], limit2: 2004.29, limit3: 2003.08 },
    T503Row { n: 75, orders: [&[(79, 2002)], &[(119, 1978)], &[(165, 1936)]], limit2: 2055.39, limit3: 2053.08 },
    T503Row { n: 76, orders: [&[(78, 2054)], &[(122, 2028)], &[(156, 1986)]], limit2: 2107.14, limit3: 2103.69 },
    T503Row { n: 77, orders: [&[(80, 2107)], &[(118, 2079)], &[(160, 2037)]], limit2: 2159.54, limit3: 2154.92 },
    T503Row { n: 78, orders: [&[(82, 2160)], &[(121, 2132)], &[(164, 2088)]], limit2: 2212.57, limit3: 2206.77 },
    T503Row { n: 79, orders: [&[(81, 2214)], &[(124, 2185)], &[(168, 2139)]], limit2: 2266.25, limit3: 2259.23 },
    T503Row { n: 80, orders: [&[(83, 2269)], &[(127, 2238)], &[(172, 2190)]], limit2: 2320.57, limit3: 2312.31 },
    T503Row { n: 81, orders: [&[(85, 2324)], &[(130, 2291)], &[(176, 2241)]], limit2: 2375.54, limit3: 2366.00 },
    T503Row { n: 82, orders: [&[(84, 2380)], &[(126, 2346)], &[(167, 2293)]], limit2: 2431.14, limit3: 2420.31 },
    T503Row { n: 83, orders: [&[(86, 2437)], &[(129, 2402)], &[(171, 2348)]], limit2: 2487.39, limit3: 2475.23 },
    T503Row { n: 84, orders: [&[(88, 2494)], &[(132, 2458)], &[(175, 2403)]], limit2: 2544.29, limit3: 2530.77 },
    T503Row { n: 85, orders: [&[(87, 2552)], &[(135, 2514)], &[(179, 2458)]], limit2: 2601.82, limit3: 2586.92 },
    T503Row { n: 86, orders: [&[(89, 2611)], &[(138, 2570), (131, 2570)], &[(183, 2513)]], limit2: 2660.00, limit3: 2643.69 },
    T503Row { n: 87, orders: [&[(91, 2670)], &[(134, 2629)], &[(187, 2568)]], limit2: 2718.82, limit3: 2701.08 },
    T503Row { n: 88, orders: [&[(90, 2730)], &[(137, 2688)], &[(191, 2623)]], limit2: 2778.29, limit3: 2759.08 },
    T503Row { n: 89, orders: [&[(92, 2791)], &[(140, 2747)], &[(182, 2681)]], limit2: 2838.39, limit3: 2817.69 },
    T503Row { n: 90, orders: [&[(94, 2852)], &[(143, 2806)], &[(186, 2740)]], limit2: 2899.14, limit3: 2876.92 },
    T503Row { n: 91, orders: [&[(93, 2914)], &[(139, 2866)], &[(190, 2799)]], limit2: 2960.54, limit3: 2936.77 },
    T503Row { n: 92, orders: [&[(95, 2977)], &[(142, 2928)], &[(194, 2858)]], limit2: 3022.57, limit3: 2997.23 },
    T503Row { n: 93, orders: [&[(97, 3040)], &[(145, 2990)], &[(198, 2917)]], limit2: 3085.25, limit3: 3058.31 },
    T503Row { n: 94, orders: [&[(96, 3104)], &[(148, 3052)], &[(202, 2976)]], limit2: 3148.57, limit3: 3120.00 },
    T503Row { n: 95, orders: [&[(98, 3169)], &[(151, 3114)], &[(193, 3036)]], limit2: 3212.54, limit3: 3182.31 },
    T503Row { n: 96, orders: [&[(100, 3234)], &[(147, 3178)], &[(197, 3099)]], limit2: 3277.14, limit3: 3245.23 },
    T503Row { n: 97, orders: [&[(99, 3300)], &[(150, 3243)], &[(201, 3162)]], limit2: 3342.39, limit3: 3308.77 },
    T503Row { n: 98, orders: [&[(101, 3367)], &[(153, 3308)], &[(205, 3225)]], limit2: 3408.29, limit3: 3372.92 },
    T503Row { n: 99, orders: [&[(103, 3434)], &[(156, 3373)], &[(209, 3288)]], limit2: 3474.82, limit3: 3437.69 },
    T503Row { n: 100, orders: [&[(102, 3502)], &[(159, 3438), (152, 3438)], &[(213, 3351)]], limit2: 3542.00, limit3: 3503.08 },
    T503Row { n: 101, orders: [&[(104, 3571)], &[(155, 3506)], &[(217, 3414)]], limit2: 3609.82, limit3: 3569.08 },
    T503Row { n: 102, orders: [&[(106, 3640)], &[(158, 3574)], &[(208, 3480)]], limit2: 3678.29, limit3: 3635.69 },
    T503Row { n: 103, orders: [&[(105, 3710)], &[(161, 3642)], &[(212, 3547)]], limit2: 3747.39, limit3: 3702.92 },
    T503Row { n: 104, orders: [&[(107, 3781)], &[(164, 3710)], &[(216, 3614)]], limit2: 3817.14, limit3: 3770.77 },
    T503Row { n: 105, orders: [&[(109, 3852)], &[(160, 3779)], &[(220, 3681)]], limit2: 3887.54, limit3: 3839.23 },
    T503Row { n: 106, orders: [&[(108, 3924)], &[(163, 3850)], &[(224, 3748)]], limit2: 3958.57, limit3: 3908.31 },
    T503Row { n: 107, orders: [&[(110, 3997)], &[(166, 3921)], &[(228, 3815)]], limit2: 4030.25, limit3: 3978.00 },
    T503Row { n: 108, orders: [&[(112, 4070)], &[(169, 3992)], &[(219, 3883)]], limit2: 4102.57, limit3: 4048.31 },
    T503Row { n: 109, orders: [&[(111, 4144)], &[(172, 4063)], &[(223, 3954)]], limit2: 4175.54, limit3: 4119.23 },
    T503Row { n: 110, orders: [&[(113, 4219)], &[(168, 4136)], &[(227, 4025)]], limit2: 4249.14, limit3: 4190.77 },
    T503Row { n: 111, orders: [&[(115, 4294)], &[(171, 4210)], &[(231, 4096)]], limit2: 4323.39, limit3: 4262.92 },
    T503Row { n: 112, orders: [&[(114, 4370)], &[(174, 4284)], &[(235, 4167)]], limit2: 4398.29, limit3: 4335.69 },
    T503Row { n: 113, orders: [&[(116, 4447)], &[(177, 4358)], &[(239, 4238)]], limit2: 4473.82, limit3: 4409.08 },
    T503Row { n: 114, orders: [&[(118, 4524)], &[(180, 4432), (173, 4432)], &[(243, 4309)]], limit2: 4550.00, limit3: 4483.08 },
    T503Row { n: 115, orders: [&[(117, 4602)], &[(176, 4509)], &[(234, 4383)]], limit2: 4626.82, limit3: 4557.69 },
    T503Row { n: 116, orders: [&[(119, 4681)], &[(179, 4586)], &[(238, 4458)]], limit2: 4704.29, limit3: 4632.92 },
    T503Row { n: 117, orders: [&[(121, 4760)], &[(182, 4663)], &[(242, 4533)]], limit2: 4782.39, limit3: 4708.77 },
    T503Row { n: 118, orders: [&[(120, 4840)], &[(185, 4740)], &[(246, 4608)]], limit2: 4861.14, limit3: 4785.23 },
    T503Row { n: 119, orders: [&[(122, 4921)], &[(181, 4818)], &[(250, 4683)]], limit2: 4940.54, limit3: 4862.31 },
    T503Row { n: 120, orders: [&[(124, 5002)], &[(184, 4898)], &[(254, 4758)]], limit2: 5020.57, limit3: 4940.00 },
    T503Row { n: 121, orders: [&[(123, 5084)], &[(187, 4978)], &[(245, 4834)]], limit2: 5101.25, limit3: 5018.31 },
    T503Row { n: 122, orders: [&[(125, 5167)], &[(190, 5058)], &[(249, 4913)]], limit2: 5182.57, limit3: 5097.23 },
    T503Row { n: 123, orders: [&[(127, 5250)], &[(193, 5138)], &[(253, 4992)]], limit2: 5264.54, limit3: 5176.77 },
    T503Row { n: 124, orders: [&[(126, 5334)], &[(189, 5220)], &[(257, 5071)]], limit2: 5347.14, limit3: 5256.92 },
    T503Row { n: 125, orders: [&[(128, 5419)], &[(192, 5303)], &[(261, 5150)]], limit2: 5430.39, limit3: 5337.69 },
    T503Row { n: 126, orders: [&[(130, 5504)], &[(195, 5386)], &[(265, 5229)]], limit2: 5514.29, limit3: 5419.08 },
    T503Row { n: 127, orders: [&[(129, 5590)], &[(198, 5469)], &[(269, 5308)]], limit2: 5598.82, limit3: 5501.08 },
    T503Row { n: 128, orders: [&[(131, 5677)], &[(201, 5552), (194, 5552)], &[(260, 5390)]], limit2: 5684.00, limit3: 5583.69 },
    T503Row { n: 129, orders: [&[(133, 5764)], &[(197, 5638)], &[(264, 5473)]], limit2: 5769.82, limit3: 5666.92 },
    T503Row { n: 130, orders: [&[(132, 5852)], &[(200, 5724)], &[(268, 5556)]], limit2: 5856.29, limit3: 5750.77 },
    T503Row { n: 131, orders: [&[(134, 5941)], &[(203, 5810)], &[(272, 5639)]], limit2: 5943.39, limit3: 5835.23 },
    T503Row { n: 132, orders: [&[(136, 6030)], &[(206, 5896)], &[(276, 5722)]], limit2: 6031.14, limit3: 5920.31 },
    T503Row { n: 133, orders: [&[(135, 6120)], &[(202, 5983)], &[(280, 5805)]], limit2: 6119.54, limit3: 6006.00 },
];

/// Best key-1 and key-p generators: `(n, key1 (a2,a3) or (0,0), keyp (a2,a3), theoretical a2, limit)`.
pub type KeyRow = (i64, (i64, i64), (i64, i64), f64, f64);

/// Order 3.
pub const T501: &[KeyRow] = &[
    (2, (0, 0), (9, 11), 8.00, 20.31),
    (3, (7, 12), (13, 16), 10.00, 26.00),
    (4, (11, 19), (17, 21), 12.00, 32.31),
    (5, (15, 26), (21, 26), 14.00, 39.23),
    (6, (19, 33), (25, 31), 16.00, 46.77),
    (7, (23, 40), (29, 36), 18.00, 54.92),
    (8, (27, 47), (20, 44), 20.00, 63.69),
    (9, (31, 54), (24, 53), 22.00, 73.08),
    (10, (35, 61), (28, 62), 24.00, 83.08),
    (11, (26, 71), (32, 71), 26.00, 93.69),
    (12, (30, 82), (36, 80), 28.00, 104.92),
    (13, (34, 93), (40, 89), 30.00, 116.77),
    (14, (38, 104), (31, 99), 32.00, 129.23),
    (15, (42, 115), (35, 112), 34.00, 142.31),
    (16, (46, 126), (39, 125), 36.00, 156.00),
    (17, (37, 138), (43, 138), 38.00, 170.31),
    (18, (41, 153), (47, 151), 40.00, 185.23),
    (19, (45, 168), (51, 164), 42.00, 200.77),
    (20, (49, 183), (55, 177), 44.00, 216.92),
    (21, (53, 198), (46, 193), 46.00, 233.69),
    (22, (57, 213), (50, 210), 48.00, 251.08),
    (23, (61, 228), (54, 227), 50.00, 269.08),
    (24, (52, 246), (58, 244), 52.00, 287.69),
    (25, (56, 265), (62, 261), 54.00, 306.92),
    (26, (60, 284), (66, 278), 56.00, 326.77),
    (27, (64, 303), (57, 296), 58.00, 347.23),
    (28, (68, 322), (61, 317), 60.00, 368.31),
    (29, (72, 341), (65, 338), 62.00, 390.00),
    (30, (63, 361), (69, 359), 64.00, 412.31),
    (31, (67, 384), (73, 380), 66.00, 435.23),
    (32, (71, 407), (77, 401), 68.00, 458.77),
    (33, (75, 430), (81, 422), 70.00, 482.92),
    (34, (79, 453), (72, 446), 72.00, 507.69),
    (35, (83, 476), (76, 471), 74.00, 533.08),
    (36, (87, 499), (80, 496), 76.00, 559.08),
    (37, (78, 525), (84, 521), 78.00, 585.69),
    (38, (82, 552), (88, 546), 80.00, 612.92),
    (39, (86, 579), (92, 571), 82.00, 640.77),
    (40, (90, 606), (83, 597), 84.00, 669.23),
    (41, (94, 633), (87, 626), 86.00, 698.31),
    (42, (98, 660), (91, 655), 88.00, 728.00),
    (43, (89, 688), (95, 684), 90.00, 758.31),
    (44, (93, 719), (99, 713), 92.00, 789.23),
    (45, (97, 750), (103, 742), 94.00, 820.77),
    (46, (101, 781), (107, 771), 96.00, 852.92),
    (47, (105, 812), (98, 803), 98.00, 885.69),
    (48, (109, 843), (102, 836), 100.00, 919.08),
    (49, (113, 874), (106, 869), 102.00, 953.08),
    (50, (104, 908), (110, 902), 104.00, 987.69),
    (51, (108, 943), (114, 935), 106.00, 1022.92),
    (52, (112, 978), (118, 968), 108.00, 1058.77),
    (53, (116, 1013), (109, 1002), 110.00, 1095.23),
    (54, (120, 1048), (113, 1039), 112.00, 1132.31),
    (55, (124, 1083), (117, 1076), 114.00, 1170.00),
    (56, (115, 1119), (121, 1113), 116.00, 1208.31),
    (57, (119, 1158), (125, 1150), 118.00, 1247.23),
    (58, (123, 1197), (129, 1187), 120.00, 1286.77),
    (59, (127, 1236), (133, 1224), 122.00, 1326.92),
    (60, (131, 1275), (124, 1264), 124.00, 1367.69),
];

/// Order 7.
pub const T502: &[KeyRow] = &[
    (2, (0, 0), (17, 19), 16.00, 61.02),
    (3, (0, 0), (25, 28), 20.00, 70.49),
    (4, (0, 0), (33, 37), 24.00, 80.53),
    (5, (0, 0), (41, 46), 28.00, 91.12),
    (6, (0, 0), (49, 55), 32.00, 102.28),
    (7, (15, 28), (57, 64), 36.00, 114.00),
    (8, (23, 43), (65, 73), 40.00, 126.28),
    (9, (31, 58), (73, 82), 44.00, 139.12),
    (10, (39, 73), (81, 91), 48.00, 152.53),
    (11, (47, 88), (89, 100), 52.00, 166.49),
    (12, (55, 103), (97, 109), 56.00, 181.02),
    (13, (63, 118), (105, 118), 60.00, 196.11),
    (14, (71, 133), (113, 127), 64.00, 211.75),
    (21, (127, 238), (112, 237), 92.00, 337.02),
    (22, (135, 253), (120, 254), 96.00, 357.16),
    (23, (143, 268), (128, 271), 100.00, 377.86),
    (24, (151, 283), (136, 288), 104.00, 399.12),
    (25, (159, 298), (144, 305), 108.00, 420.95),
    (26, (110, 316), (152, 322), 112.00, 443.33),
    (27, (118, 339), (160, 339), 116.00, 466.28),
    (28, (126, 362), (168, 356), 120.00, 489.79),
    (36, (190, 546), (175, 545), 152.00, 698.07),
    (37, (198, 569), (183, 570), 156.00, 726.63),
    (38, (206, 592), (191, 595), 160.00, 755.75),
    (39, (214, 615), (199, 620), 164.00, 785.44),
    (40, (165, 639), (207, 645), 168.00, 815.68),
    (41, (173, 670), (215, 670), 172.00, 846.49),
    (42, (181, 701), (223, 695), 176.00, 877.86),
    (51, (253, 980), (238, 979), 212.00, 1185.44),
    (52, (261, 1011), (246, 1012), 216.00, 1222.42),
    (53, (269, 1042), (254, 1045), 220.00, 1259.96),
    (54, (277, 1073), (262, 1078), 224.00, 1298.07),
    (55, (228, 1111), (270, 1111), 228.00, 1336.74),
    (56, (236, 1150), (278, 1144), 232.00, 1375.96),
    (66, (316, 1540), (301, 1539), 272.00, 1799.12),
    (67, (324, 1579), (309, 1580), 276.00, 1844.53),
    (68, (332, 1618), (317, 1621), 280.00, 1890.49),
    (69, (283, 1662), (325, 1662), 284.00, 1937.02),
    (70, (291, 1709), (333, 1703), 288.00, 1984.11),
    (81, (379, 2226), (364, 2225), 332.00, 2539.12),
    (82, (387, 2273), (372, 2274), 336.00, 2592.95),
    (83, (338, 2323), (380, 2323), 340.00, 2647.33),
    (84, (346, 2378), (388, 2372), 344.00, 2702.28),
    (96, (442, 3038), (427, 3037), 392.00, 3405.44),
    (97, (393, 3094), (435, 3094), 396.00, 3467.68),
    (98, (401, 3157), (443, 3151), 400.00, 3530.49),
];

/// Per-case counts `(n, 1a, 1b, 2a, 2b)` of `SG(n,3)`.
pub const KEY1P_COUNTS: &[(i64, [usize; 4])] = &[
    (2, [0, 0, 1, 2]),
    (3, [1, 1, 1, 3]),
    (4, [2, 2, 1, 4]),
    (5, [3, 2, 2, 6]),
    (6, [4, 2, 3, 8]),
    (7, [6, 3, 3, 10]),
    (8, [8, 4, 3, 12]),
    (9, [10, 5, 4, 15]),
    (10, [12, 5, 5, 18]),
];

/// `pp(s)` for `s = 40..=58`.
pub const PP_PRINTOUT: [f64; 19] = [
    3.89587147, 3.886196467, 3.877084829, 3.868488896, 3.860366224,
    3.852678896, 3.84539293, 3.838477784, 3.831905935, 3.825652509,
    3.819694975, 3.814012876, 3.808587592, 3.803402143, 3.798441011,
    3.793689985, 3.789136026, 3.784767153, 3.780572334,
];
