"""Published reference values and the cases that reproduce them.

Rows are stored verbatim as whitespace-separated text; each family parses
its rows into :class:`Reference` records carrying a ready-to-run case.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .config import Case

TABLE_3 = """
0 2 0.2734 0.2799 0.2819 0.2828 0.2833 0.2835 0.2837 0.2838
0 3 0.2823 0.2841 0.2842 0.2842 0.2842 0.2842 0.2842 0.2842
0 4 0.2843 0.2842 0.2842 0.2842 0.2842 0.2842 0.2842 0.2842
0.2 2 0.2346 0.2397 0.2413 0.2420 0.2424 0.2426 0.2427 0.2428
0.2 3 0.2415 0.2430 0.2431 0.2431 0.2431 0.2431 0.2431 0.2431
0.2 4 0.2432 0.2431 0.2431 0.2431 0.2431 0.2431 0.2431 0.2431
0.6 2 0.1098 0.1115 0.1121 0.1123 0.1125 0.1125 0.1126 0.1126
0.6 3 0.1120 0.1127 0.1127 0.1127 0.1127 0.1127 0.1127 0.1127
0.6 4 0.1127 0.1127 0.1127 0.1127 0.1127 0.1127 0.1127 0.1127
1 2 0.0532 0.0539 0.0541 0.0542 0.0543 0.0543 0.0543 0.0543
1 3 0.0541 0.0544 0.0544 0.0544 0.0544 0.0544 0.0544 0.0544
1 4 0.0544 0.0544 0.0544 0.0544 0.0544 0.1127 0.1127 0.1127
"""

TABLE_4 = """
sinusoidal 1 0.7284 0.5889 0.5625 0.6935 0.5691 0.5460
sinusoidal 4 1.1590 0.8813 0.8287 1.0868 0.8392 0.7933
sinusoidal 10 1.3902 1.0086 0.9362 1.3116 0.9748 0.9132
uniform 1 1.1319 0.9288 0.8904 1.0788 0.8978 0.8642
uniform 4 1.7928 1.3882 1.3116 1.6827 1.3223 1.2556
uniform 10 2.1432 1.5870 1.4818 2.0244 1.5347 1.4454
"""

TABLE_5 = """
5 0 0.3433 0.3360 0.6688 0.6401 1.2271 1.1663
5 0.2 0.2898 0.2853 0.5505 0.5321 1.0400 1.0019
5 0.4 0.1975 0.1965 0.3601 0.3537 0.7140 0.7043
5 0.6 0.1292 0.1296 0.2288 0.2274 0.4694 0.4711
5 0.8 0.0871 0.0879 0.1517 0.1520 0.3174 0.3220
5 1 0.0614 0.0623 0.1060 0.1069 0.2242 0.2289
20 0 0.2842 0.2836 0.5689 0.5516 0.9537 0.9280
20 0.2 0.2431 0.2427 0.4739 0.4619 0.8313 0.8120
20 0.4 0.1695 0.1694 0.3157 0.3105 0.6001 0.5906
20 0.6 0.1127 0.1127 0.2029 0.2008 0.4102 0.4061
20 0.8 0.0767 0.0768 0.1352 0.1343 0.2842 0.2825
20 1 0.0544 0.0544 0.0947 0.0943 0.2038 0.2031
100 0 0.2804 0.2803 0.5625 0.5460 0.9362 0.9132
100 0.2 0.2401 0.2400 0.4689 0.4574 0.8176 0.8001
100 0.4 0.1677 0.1677 0.3128 0.3076 0.5925 0.5833
100 0.6 0.1116 0.1116 0.2012 0.1990 0.4062 0.4018
100 0.8 0.0760 0.0760 0.1341 0.1332 0.2820 0.2799
100 1 0.0539 0.0539 0.0939 0.0934 0.2024 0.2014
"""

TABLE_6 = """
sinusoidal 5 0 0.1601 0.1359 0.3021 0.2554 0.6111 0.4740
sinusoidal 5 0.2 0.1378 0.1197 0.2555 0.2214 0.5178 0.4199
sinusoidal 5 0.4 0.0974 0.0883 0.1751 0.1586 0.3568 0.3132
sinusoidal 5 0.6 0.0655 0.0616 0.1151 0.1081 0.2358 0.2204
sinusoidal 5 0.8 0.0450 0.0435 0.0779 0.0752 0.1602 0.1559
sinusoidal 5 1 0.0321 0.0316 0.0551 0.0542 0.1136 0.1134
sinusoidal 20 0 0.1035 0.0950 0.2065 0.1863 0.3505 0.3150
sinusoidal 20 0.2 0.0919 0.0849 0.1797 0.1638 0.3150 0.2857
sinusoidal 20 0.4 0.0688 0.0645 0.1294 0.1204 0.2419 0.2237
sinusoidal 20 0.6 0.0485 0.0462 0.0882 0.0837 0.1746 0.1647
sinusoidal 20 0.8 0.0343 0.0331 0.0611 0.0587 0.1258 0.1204
sinusoidal 20 1 0.0250 0.0243 0.0438 0.0425 0.0926 0.0896
sinusoidal 100 0 0.0999 0.0955 0.2003 0.1872 0.3336 0.3131
sinusoidal 100 0.2 0.0889 0.0853 0.1746 0.1643 0.3013 0.2842
sinusoidal 100 0.4 0.0668 0.0646 0.1262 0.1204 0.2336 0.2228
sinusoidal 100 0.6 0.0473 0.0461 0.0863 0.0835 0.1701 0.1640
sinusoidal 100 0.8 0.0336 0.0329 0.0599 0.0584 0.1232 0.1199
sinusoidal 100 1 0.0244 0.0241 0.0430 0.0422 0.0910 0.0891
uniform 5 0 0.2239 0.1860 0.4220 0.3500 0.8557 0.6408
uniform 5 0.2 0.1924 0.1641 0.3566 0.3040 0.7233 0.5701
uniform 5 0.4 0.1358 0.1215 0.2443 0.2186 0.4976 0.4286
uniform 5 0.6 0.0914 0.0851 0.1606 0.1495 0.3288 0.3034
uniform 5 0.8 0.0627 0.0602 0.1087 0.1041 0.2234 0.2154
uniform 5 1 0.0447 0.0439 0.0769 0.0752 0.1584 0.1570
uniform 20 0 0.1436 0.1300 0.2864 0.2553 0.4863 0.4307
uniform 20 0.2 0.1275 0.1164 0.2493 0.2248 0.4372 0.3912
uniform 20 0.4 0.0956 0.0887 0.1797 0.1657 0.3360 0.3072
uniform 20 0.6 0.0674 0.0637 0.1227 0.1156 0.2428 0.2269
uniform 20 0.8 0.0478 0.0457 0.0850 0.0813 0.1750 0.1664
uniform 20 1 0.0348 0.0336 0.0610 0.0589 0.1289 0.1240
uniform 100 0 0.1384 0.1314 0.2775 0.2577 0.4622 0.4310
uniform 100 0.2 0.1232 0.1174 0.2421 0.2265 0.4176 0.3915
uniform 100 0.4 0.0927 0.0891 0.1751 0.1664 0.3242 0.3075
uniform 100 0.6 0.0657 0.0637 0.1199 0.1155 0.2363 0.2268
uniform 100 0.8 0.0467 0.0456 0.0833 0.0810 0.1713 0.1661
uniform 100 1 0.0340 0.0334 0.0598 0.0586 0.1266 0.1236
"""

TABLE_8 = """
5 rpt 5.2813 5.7496 6.9667 8.6191 9.8943 9.9791
5 quasi3d 5.3090 5.7622 6.9438 8.5509 9.8943 9.9791
20 rpt 5.9199 6.4009 7.6646 9.4005 11.3945 13.5330
20 quasi3d 5.9235 6.4030 7.6633 9.3952 11.3854 13.5202
100 rpt 5.9712 6.4534 7.7215 9.4646 11.4682 13.6178
100 quasi3d 5.9723 6.4544 7.7222 9.4650 11.4683 13.6177
"""

TABLE_9 = """
5 0 5.2813 5.3090 4.0781 4.1521 3.2519 3.3126
5 0.2 5.7496 5.7622 4.4959 4.5542 3.5312 3.5740
5 0.4 6.9667 6.9438 5.5620 5.5865 4.2584 4.2627
5 0.6 8.6191 8.5509 6.9822 6.9681 5.2471 5.2115
5 0.8 9.8943 9.8943 8.2313 8.2313 5.8571 5.8571
5 1 9.9791 9.9791 8.3019 8.3019 5.9073 5.9073
20 0 5.9199 5.9235 4.5228 4.5919 3.7623 3.8129
20 0.2 6.4009 6.4030 4.9556 5.0179 4.0299 4.0761
20 0.4 7.6646 7.6633 6.0714 6.1203 4.7428 4.7794
20 0.6 9.4005 9.3952 7.5739 7.6107 5.7369 5.7640
20 0.8 11.3945 11.3854 9.2768 9.3042 6.8914 6.9106
20 1 13.5330 13.5202 11.0882 11.1082 8.1384 8.1510
100 0 5.9712 5.9723 4.5579 4.6263 3.8058 3.8533
100 0.2 6.4534 6.4544 4.9922 5.0546 4.0724 4.1168
100 0.4 7.7215 7.7222 6.1124 6.1635 4.7837 4.8215
100 0.6 9.4646 9.4650 7.6220 7.6630 5.7778 5.8090
100 0.8 11.4682 11.4683 9.3339 9.3673 6.9341 6.9600
100 1 13.6178 13.6177 11.1554 11.1832 8.1842 8.2060
"""

TABLE_10 = """
SSSS 5 quasi3d 7.8883 13.8049 13.8049 17.2045 17.2045 19.5422
SSSS 5 rpt 7.7844 13.8049 13.8049 16.9943 16.9943 19.5422
SSSS 10 quasi3d 8.5607 20.2031 20.2031 27.5893 27.5893 31.5547
SSSS 10 rpt 8.4401 19.9188 19.9188 27.5893 27.5893 31.1386
SSSS 100 quasi3d 8.8390 21.7802 21.7802 35.3221 43.0573 43.0573
SSSS 100 rpt 8.7127 21.4598 21.4598 34.8171 42.4074 42.4074
CCCC 5 quasi3d 13.1029 22.9300 22.9300 27.8791 27.8791 31.3005
CCCC 5 rpt 12.1531 22.0683 22.0683 26.3182 26.3182 30.5398
CCCC 10 quasi3d 15.4413 29.3267 29.3267 41.5955 48.2657 48.4504
CCCC 10 rpt 14.3638 27.8276 27.8276 39.9305 46.0435 46.4772
CCCC 100 quasi3d 16.0540 32.6082 32.6082 48.5477 58.0353 58.3402
CCCC 100 rpt 15.5212 31.5708 31.5708 47.0903 56.2566 56.5207
"""

TABLE_10_CIRC = """
SS 0 rpt 4.9304 13.8591 25.4799 29.5456 39.6518 48.0402
SS 0 quasi3d 4.9385 13.8701 25.4983 29.5691 39.6881 48.0906
SS 0.2 rpt 4.9925 14.5095 26.5426 31.1786 41.8855 50.8427
SS 0.2 quasi3d 5.0024 14.5206 26.5613 31.1981 41.9148 50.8808
SS 0.4 rpt 5.1213 16.2743 29.4369 35.5996 47.7406 58.5547
SS 0.4 quasi3d 5.1365 16.2857 29.4529 35.6092 47.7542 58.5621
SS 0.6 rpt 5.2422 18.8078 33.6370 41.9096 55.8684 69.6631
SS 0.6 quasi3d 5.2649 18.8192 33.6497 41.9065 55.8623 69.6331
SS 0.8 rpt 5.3324 21.8342 38.6993 49.3881 65.3972 82.8177
SS 0.8 quasi3d 5.3642 21.8450 38.7080 49.3713 65.3694 82.7497
SS 1 rpt 5.3954 25.1769 44.3292 57.5842 75.8223 97.1772
SS 1 quasi3d 5.4379 25.1869 44.3335 57.5538 75.7721 97.0720
CC 0 rpt 10.1842 21.1459 34.5885 39.3832 50.4865 60.0416
CC 0 quasi3d 10.4466 21.6458 35.2774 40.2833 51.5045 61.3186
CC 0.2 rpt 10.8087 22.4449 36.3961 41.8103 53.5802 63.7743
CC 0.2 quasi3d 11.0612 22.9236 37.1800 42.6664 54.5550 64.9738
CC 0.4 rpt 12.4963 25.9527 41.2953 48.3406 61.7419 73.9729
CC 0.4 quasi3d 12.7255 26.3811 41.9956 49.0934 62.6149 74.9922
CC 0.6 rpt 14.8897 30.9242 48.3696 57.5674 73.1139 88.5334
CC 0.6 quasi3d 15.0927 31.2968 48.9732 58.2073 73.8637 89.3634
CC 0.8 rpt 17.7051 36.7699 56.8123 68.4011 86.4224 105.6689
CC 0.8 quasi3d 17.8850 37.0938 57.3265 68.9439 87.0506 106.3411
CC 1 rpt 20.7715 43.1360 66.1009 80.1939 100.9243 124.3039
CC 1 quasi3d 20.9330 43.4206 66.5388 80.6591 101.4425 124.8498
"""

TABLE_10_CIRC_FG = """
SS 0 quasi3d 3.4132 8.8258 8.8258 12.9916 12.9916 15.3331
SS 0 rpt 3.3572 8.6722 8.6722 12.9121 12.9121 15.0490
SS 0.2 quasi3d 3.4675 9.2928 9.2928 13.1928 13.1928 16.1022
SS 0.2 rpt 3.4118 9.1595 9.1595 13.1037 13.1037 15.8706
SS 0.4 quasi3d 3.5698 10.5288 10.5288 13.3143 13.3143 18.1203
SS 0.4 rpt 3.5114 10.4415 10.4415 13.2326 13.2326 18.0361
SS 0.6 quasi3d 3.6687 12.1873 12.1873 13.5445 13.5445 18.4939
SS 0.6 rpt 3.6018 12.1378 12.1378 13.4872 13.4872 18.4475
SS 0.8 quasi3d 3.7546 13.2030 13.2030 14.7552 14.7552 18.6655
SS 0.8 rpt 3.6721 13.1245 13.1245 14.7850 14.7850 18.6192
SS 1 quasi3d 3.8303 13.4243 13.4243 16.9751 16.9751 18.8618
SS 1 rpt 3.9557 13.5531 13.5531 17.4735 17.4735 18.8633
CC 0 quasi3d 6.8745 13.1770 13.1770 20.0202 20.0388 22.2840
CC 0 rpt 6.3384 12.4133 12.4133 19.0879 19.1363 20.9877
CC 0.2 quasi3d 7.3195 14.0950 14.0950 21.3095 21.7503 23.9885
CC 0.2 rpt 6.8208 13.4172 13.4172 20.5401 20.9799 22.8902
CC 0.4 quasi3d 8.5121 16.5390 16.5390 24.7273 25.8504 25.8504
CC 0.4 rpt 8.0909 16.0391 16.0391 24.2526 24.3345 24.3345
CC 0.6 quasi3d 10.1880 19.9431 19.9431 25.8948 25.8948 28.6525
CC 0.6 rpt 9.8463 19.6321 19.6321 24.3655 24.3655 28.6525
CC 0.8 quasi3d 12.1441 23.8850 23.8850 25.9507 25.9507 28.9380
CC 0.8 rpt 11.8741 23.7016 23.7016 24.4627 24.4627 28.9380
CC 1 quasi3d 14.2615 25.9953 25.9953 28.1492 28.1492 29.3010
CC 1 rpt 14.0568 24.4150 24.4150 28.2217 28.2217 29.3010
"""

TABLE_11 = """
0 rpt 15.3321 6.8610 2.7702 18.0756 7.8277 3.4982 18.9244 8.1143 3.7454
0 quasi3d 15.3629 7.3905 3.0118 18.1561 8.5396 3.8921 18.9675 8.8639 4.1850
0.2 rpt 17.8878 8.2820 3.2917 20.8497 9.3581 4.0246 21.7628 9.6766 4.2677
0.2 quasi3d 17.7286 8.7153 3.4728 20.8583 10.0344 4.3958 21.7852 10.4160 4.7009
0.4 rpt 25.5457 12.5322 4.8371 29.1700 13.9459 5.5925 30.2773 14.3626 5.8312
0.4 quasi3d 24.8060 12.6741 4.8557 28.9624 14.5168 5.9066 30.2381 15.0722 6.2486
0.6 rpt 38.2867 19.5858 7.3772 43.0329 21.5846 8.1871 44.4673 22.1708 8.4312
0.6 quasi3d 36.5415 19.2256 7.1597 42.4620 21.9814 8.4246 44.3258 22.8320 8.8281
0.8 rpt 56.0961 29.4240 10.9005 62.4358 32.2693 11.8036 64.3321 33.0999 12.0666
0.8 quasi3d 52.8623 28.3151 10.3843 61.3467 32.4199 11.9498 64.0474 33.6948 12.4394
1 rpt 78.9675 42.0388 15.4071 87.3775 45.9981 16.4431 89.8715 47.1494 16.7376
1 quasi3d 73.6925 39.8872 14.5287 85.6043 45.8223 16.4819 89.4018 47.6596 17.0825
"""

TABLE_12 = """
SSSS 5 0 87.4747 86.5475 35.0795 35.6610 21.7236 21.7189
SSSS 5 0.2 103.6359 101.8797 42.3816 42.6185 25.4909 25.2307
SSSS 5 0.4 152.0215 147.6312 64.2668 63.3902 36.7873 35.7417
SSSS 5 0.6 232.4351 223.1633 100.6957 97.7189 55.6034 53.1891
SSSS 5 0.8 344.7280 327.6683 151.6424 145.2904 81.9336 77.4961
SSSS 5 1 488.8378 460.3907 217.0988 205.8260 115.7764 108.5941
SSSS 20 0 105.6668 105.6221 42.0033 43.4065 27.5182 27.8578
SSSS 20 0.2 123.5339 123.4102 49.9504 51.3272 31.5521 31.8705
SSSS 20 0.4 177.1295 176.7715 73.7907 75.0881 43.6520 43.9085
SSSS 20 0.6 266.4425 265.6972 113.5226 114.6856 63.8152 63.9707
SSSS 20 0.8 391.4648 390.1733 169.1451 170.1141 92.0401 92.0558
SSSS 20 1 552.1931 550.1813 240.6580 241.3659 128.3267 128.1618
SSSS 100 0 107.0958 107.1271 42.5423 44.0165 27.9978 28.3566
SSSS 100 0.2 125.0926 125.1206 50.5370 52.0102 32.0486 32.4065
SSSS 100 0.4 179.0825 179.1009 74.5212 75.9913 44.2009 44.5563
SSSS 100 0.6 269.0653 269.0682 114.4947 115.9596 64.4546 64.8061
SSSS 100 0.8 395.0406 395.0223 170.4576 171.9154 92.8097 93.1557
SSSS 100 1 557.0082 556.9633 242.4098 243.8584 129.2661 129.6052
CCCC 5 0 178.2578 188.3478 72.2150 78.0421 42.1220 45.4860
CCCC 5 0.2 206.9297 215.7331 85.4028 90.6731 49.1101 52.1032
CCCC 5 0.4 292.6287 295.5433 124.8630 127.4320 69.9984 71.1001
CCCC 5 0.6 435.0030 424.8837 190.5274 187.0650 104.7011 101.8084
CCCC 5 0.8 633.8611 601.6084 282.3839 268.7548 153.1709 144.0664
CCCC 5 1 889.1171 823.8983 400.4310 371.8457 215.3906 197.7752
CCCC 20 0 273.9507 288.6976 109.0237 117.3906 70.8926 75.2177
CCCC 20 0.2 308.7803 323.9291 124.5481 133.0578 78.8262 83.2085
CCCC 20 0.4 413.0833 429.0109 171.0330 179.8054 102.5575 107.0378
CCCC 20 0.6 586.6304 603.0356 248.3764 257.2793 141.9833 146.4815
CCCC 20 0.8 829.3607 845.5938 356.5558 365.3387 197.0586 201.4295
CCCC 20 1 1141.2885 1156.5929 495.5793 503.9582 267.7793 271.8584
CCCC 100 0 283.7646 292.2008 112.7294 119.3117 74.1644 77.0743
CCCC 100 0.2 319.1326 327.9091 128.4414 135.1344 82.1289 85.1055
CCCC 100 0.4 425.0550 434.6081 175.4917 182.4322 105.9838 109.1182
CCCC 100 0.6 601.2918 611.6685 253.7742 260.9696 145.6726 148.9836
CCCC 100 0.8 847.7694 858.8291 363.2623 370.6627 201.1735 204.6383
CCCC 100 1 1164.4998 1176.0787 503.9643 511.5167 272.4865 276.0730
"""

TABLE_13 = """
0 rpt 14.0932 12.5776 11.6409 10.6719
0 quasi3d 14.8264 13.4557 12.4564 11.3775
0.5 rpt 19.4169 17.3133 16.0153 14.6740
0.5 quasi3d 20.5166 18.6074 17.2206 15.7222
2 rpt 23.0809 20.8088 19.3812 17.8848
2 quasi3d 24.4332 22.3510 20.8035 19.1161
5 rpt 25.4469 22.9742 21.4168 19.7813
5 quasi3d 26.8812 24.6195 22.9303 21.0878
10 rpt 27.1395 24.4287 22.7297 20.9524
10 quasi3d 28.6197 26.1483 24.3140 22.3196
"""

TABLE_14 = """
SS 0.1 0 22.5182 22.6953 9.5368 9.7960 5.9574 6.0309
SS 0.1 0.2 23.0489 23.2627 9.8179 10.0793 6.0876 6.1617
SS 0.1 0.4 24.1022 24.4172 10.3474 10.6292 6.3543 6.4360
SS 0.1 0.6 25.0682 25.5337 10.8125 11.1391 6.6130 6.7163
SS 0.1 0.8 25.7985 26.4629 11.1543 11.5512 6.8182 6.9619
SS 0.1 1 26.3291 27.2420 11.3981 11.8897 6.9718 7.1752
SS 0.2 0 21.7456 22.0263 9.2059 9.4510 5.6942 5.7510
SS 0.2 0.2 22.2719 22.5928 9.4873 9.7327 5.8318 5.8833
SS 0.2 0.4 23.2739 23.7059 9.9893 10.2520 6.1019 6.1509
SS 0.2 0.6 24.2066 24.8190 10.4423 10.7545 6.3676 6.4377
SS 0.2 0.8 24.9581 25.8386 10.8003 11.2074 6.5891 6.7170
SS 0.2 1 25.5480 26.7897 11.0777 11.6254 6.7647 6.9866
SS 0.3 0 20.5707 20.8606 8.7033 8.9036 5.3041 5.3287
SS 0.3 0.2 21.0993 21.4128 8.9860 9.1777 5.4526 5.4621
SS 0.3 0.4 22.0854 22.4669 9.4810 9.6686 5.7409 5.7276
SS 0.3 0.6 23.0439 23.5641 9.9511 10.1693 6.0352 6.0281
SS 0.3 0.8 23.8746 24.6485 10.3517 10.6610 6.2927 6.3431
SS 0.3 1 24.5707 25.7228 10.6823 11.1443 6.5055 6.6623
CC 0.1 0 76.5059 80.4859 30.4539 32.7398 19.7743 20.9413
CC 0.1 0.2 86.3696 90.4095 34.8524 37.1578 22.0235 23.1967
CC 0.1 0.4 115.9595 120.0466 48.0474 50.3612 28.7616 29.9236
CC 0.1 0.6 165.2737 169.2564 70.0379 72.3004 39.9728 41.0821
CC 0.1 0.8 234.3115 237.9906 100.8235 102.9597 55.6486 56.6598
CC 0.1 1 323.0727 326.2293 140.4042 142.3316 75.7879 76.6551
CC 0.2 0 68.2782 73.0452 27.3245 29.8617 17.1442 18.6240
CC 0.2 0.2 77.6521 82.3859 31.5460 34.0702 19.3412 20.7979
CC 0.2 0.4 105.7687 110.0650 44.2098 46.5462 25.9122 27.1925
CC 0.2 0.6 152.6199 155.7501 65.3154 67.1544 36.8218 37.7110
CC 0.2 0.8 218.1997 219.2330 94.8629 95.8167 52.0495 52.3297
CC 0.2 1 302.5060 300.3159 132.8523 132.4584 71.5905 71.0373
CC 0.3 0 57.9331 61.7636 23.3438 25.4648 14.0464 15.3047
CC 0.3 0.2 66.6302 70.2136 27.3083 29.3268 16.1359 17.3213
CC 0.3 0.4 92.7032 95.0207 39.2004 40.6571 22.3875 23.1508
CC 0.3 0.6 136.1160 135.6444 59.0182 59.2280 32.7704 32.6634
CC 0.3 0.8 196.8399 191.6493 86.7603 84.8742 47.2643 45.8312
CC 0.3 1 274.8619 262.6208 122.4264 117.4429 65.8628 62.6312
"""

TABLE_12_MODES = """
SSSS 5 quasi3d 25.2307 46.2828 46.2828 61.4689 64.8256 64.8256
SSSS 5 rpt 25.4909 47.9306 47.9306 64.7895 68.7456 68.7456
SSSS 10 quasi3d 30.2890 67.2254 67.2254 100.9300 114.4706 114.4706
SSSS 10 rpt 30.1012 67.3570 67.3570 101.9693 116.1512 116.1512
SSSS 20 quasi3d 31.8705 75.8988 75.8988 121.1662 143.0021 143.0021
SSSS 20 rpt 31.5521 75.2628 75.2628 120.4131 142.2468 142.2468
SSSS 100 quasi3d 32.4065 79.1198 79.1198 129.3662 155.2457 155.2457
SSSS 100 rpt 32.0486 78.2296 78.2296 127.9519 153.4678 153.4678
CCCC 5 quasi3d 52.1032 66.3156 66.3156 77.2179 78.9774 84.1043
CCCC 5 rpt 49.1101 66.7907 66.7907 80.3088 82.9464 85.5400
CCCC 10 quasi3d 75.4661 115.7598 115.7598 147.8696 161.3725 174.2442
CCCC 10 rpt 70.1001 110.6293 110.6293 144.4919 158.8413 167.4729
CCCC 20 quasi3d 83.2085 140.4610 140.4610 192.6237 220.3776 239.1104
CCCC 20 rpt 78.8262 133.9531 133.9531 185.0964 211.8925 227.4324
CCCC 100 quasi3d 85.1055 148.8861 148.8861 210.7133 246.2408 267.4391
CCCC 100 rpt 82.1289 143.8128 143.8128 203.9109 237.9639 257.7571
"""

TABLE_14_MODES = """
SS 0.1 quasi3d 11.1391 54.0884 54.0884 93.7842 122.0854 128.1298
SS 0.1 rpt 10.8125 53.6215 53.6215 93.3944 122.3489 128.3281
SS 0.2 quasi3d 10.7545 49.5358 49.5358 80.6606 104.8026 108.1436
SS 0.2 rpt 10.4423 50.2378 50.2378 83.3889 109.1766 112.9355
SS 0.3 quasi3d 10.1693 43.6917 43.6917 66.3080 86.1911 87.4685
SS 0.3 rpt 9.9511 45.6739 45.6739 71.5215 93.8041 95.5819
CC 0.1 quasi3d 72.3004 125.7477 125.7477 171.5372 205.0589 221.0537
CC 0.1 rpt 70.0379 123.1185 123.1185 169.2944 203.3425 218.6139
CC 0.2 quasi3d 67.1544 108.3685 108.3685 138.0488 164.4947 172.3137
CC 0.2 rpt 65.3154 109.4813 109.4813 143.4150 171.7706 179.5962
CC 0.3 quasi3d 59.2280 88.4285 88.4285 106.6289 127.0395 129.6436
CC 0.3 rpt 59.0182 93.6789 93.6789 117.0824 140.3857 143.1361
"""


RPT = {"kind": "rpt", "distribution": "PresentRPT"}
Q3D = {"kind": "quasi3d", "distribution": "PresentQuasi3D"}
THEORIES = {"rpt": RPT, "quasi3d": Q3D}

# homogeneous plates: fully ceramic section, scaled by the same phase
HOMOGENEOUS = Case(metal="Al", ceramic="Al2O3", n=0.0)
AL_AL2O3_ROM = Case(metal="Al", ceramic="Al2O3")
AL_AL2O3_MT = Case(metal="Al", ceramic="Al2O3", scheme="mori_tanaka")

CIRCLE_HOMOGENEOUS_H_R = 1.0 / 30.0
CIRCLE_DISTINCT_MODES = (1, 2, 4, 6, 7, 9)
CONVERGENCE_MESHES = (3, 5, 7, 9, 11, 13, 15, 17)


@dataclass(frozen=True)
class Reference:
    table: str
    key: tuple[tuple[str, object], ...]
    column: str
    value: float
    tolerance: float
    case: Case
    output: str
    skip: str | None = None

    @property
    def key_label(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.key)


def _rows(block: str):
    for line in block.strip().splitlines():
        yield line.split()


def _num(text: str):
    value = float(text)
    return int(value) if value.is_integer() else value


def _bending(base: Case, **kw) -> Case:
    return replace(base, analysis="bending", convention="deflection", reference="ceramic", **kw)


def _vibration(base: Case, modes: tuple[int, ...], reference: str, **kw) -> Case:
    convention = "frequency" if kw.get("shape", base.shape) == "square" else "frequency_circle"
    return replace(base, analysis="vibration", k=max(modes), modes=modes,
                   convention=convention, reference=reference, **kw)


def _buckling(base: Case, convention: str, modes: tuple[int, ...] = (1,), **kw) -> Case:
    return replace(base, analysis="buckling", pattern="biaxial", k=max(modes), modes=modes,
                   convention=convention, reference="metal", **kw)


def _table_3():
    for row in _rows(TABLE_3):
        l_h, p, values = _num(row[0]), int(row[1]), row[2:]
        for mesh, v in zip(CONVERGENCE_MESHES, values):
            skip = "anomalous tail cell" if (l_h == 1 and p == 4 and mesh >= 13) else None
            case = _bending(HOMOGENEOUS, a_h=20.0, l_h=float(l_h), degree=p, mesh=(mesh, mesh), **RPT)
            yield Reference("3", (("l_h", l_h), ("p", p), ("mesh", mesh)), "present",
                            float(v), 0.002, case, "w_bar", skip)


def _table_4():
    for row in _rows(TABLE_4):
        load, n, values = row[0], _num(row[1]), row[2:]
        for i, v in enumerate(values):
            theory = "rpt" if i < 3 else "quasi3d"
            a_h = (4, 10, 100)[i % 3]
            case = _bending(AL_AL2O3_ROM, a_h=float(a_h), n=float(n), load=load, **THEORIES[theory])
            yield Reference("4", (("load", load), ("n", n), ("a_h", a_h)), theory, float(v),
                            0.003 if theory == "rpt" else 0.005, case, "w_bar")


def _microplate_bending(table: str, block: str, bc: str, with_load: bool):
    for row in _rows(block):
        load = row.pop(0) if with_load else "sinusoidal"
        a_h, l_h, values = _num(row[0]), _num(row[1]), row[2:]
        for i, v in enumerate(values):
            n, theory = (0, 1, 10)[i // 2], ("rpt", "quasi3d")[i % 2]
            case = _bending(AL_AL2O3_ROM, a_h=float(a_h), l_h=float(l_h), n=float(n), bc=bc,
                            load=load, **THEORIES[theory])
            key = ((("load", load),) if with_load else ()) + (("a_h", a_h), ("l_h", l_h), ("n", n))
            yield Reference(table, key, theory, float(v), 0.005, case, "w_bar")


def _table_7():
    cells = ((1, 5, 5.5172), (1, 10, 6.0023), (1, 20, 6.1505), (2, 5, 5.5324), (3, 5, 5.5642), (5, 5, 5.5886))
    base = Case(metal="Al", ceramic="ZrO2-1", scheme="mori_tanaka")
    for n, a_h, v in cells:
        case = _vibration(base, (1,), "metal", a_h=float(a_h), n=float(n), **Q3D)
        yield Reference("7", (("n", n), ("a_h", a_h)), "quasi3d", v, 0.005, case, "omega_bar_1")


def _table_8():
    for row in _rows(TABLE_8):
        a_h, theory, values = _num(row[0]), row[1], row[2:]
        for l_h, v in zip((0, 0.2, 0.4, 0.6, 0.8, 1), values):
            skip = "anomalous cell" if (a_h == 5 and l_h >= 0.8) else None
            case = _vibration(HOMOGENEOUS, (1,), "ceramic", a_h=float(a_h), l_h=float(l_h), **THEORIES[theory])
            yield Reference("8", (("a_h", a_h), ("l_h", l_h)), theory, float(v),
                            0.003 if theory == "rpt" else 0.005, case, "omega_bar_1", skip)


def _table_9():
    for row in _rows(TABLE_9):
        a_h, l_h, values = _num(row[0]), _num(row[1]), row[2:]
        for i, v in enumerate(values):
            n, theory = (0, 1, 10)[i // 2], ("rpt", "quasi3d")[i % 2]
            case = _vibration(AL_AL2O3_ROM, (1,), "ceramic", a_h=float(a_h), l_h=float(l_h), n=float(n),
                              **THEORIES[theory])
            yield Reference("9", (("a_h", a_h), ("l_h", l_h), ("n", n)), theory, float(v), 0.005,
                            case, "omega_bar_1")


def _six_modes(table, block, size_key, base, make, tolerance):
    for row in _rows(block):
        bc, size, theory, values = row[0], _num(row[1]), row[2], row[3:]
        case = make(base, (1, 2, 3, 4, 5, 6), bc=bc, **{size_key: float(size)}, **THEORIES[theory])
        prefix = "omega_bar" if case.analysis == "vibration" else "p_bar"
        for j, v in enumerate(values, start=1):
            yield Reference(table, (("bc", bc), (size_key, size), ("mode", j)), theory, float(v),
                            tolerance, case, f"{prefix}_{j}")


def _table_10():
    base = replace(AL_AL2O3_MT, n=1.0, l_h=0.2)
    make = lambda b, m, **kw: _vibration(b, m, "metal", **kw)
    yield from _six_modes("10", TABLE_10, "a_h", base, make, 0.005)


def _circle_vibration(table, block, base, modes, tolerance, anomalous=frozenset()):
    for row in _rows(block):
        bc, l_h, theory, values = row[0], _num(row[1]), row[2], row[3:]
        case = _vibration(base, modes, "ceramic", l_h=float(l_h), bc=bc, **THEORIES[theory])
        skip = "anomalous row" if (bc, l_h, theory) in anomalous else None
        for j, v in enumerate(values, start=1):
            yield Reference(table, (("bc", bc), ("l_h", l_h), ("mode", j)), theory, float(v),
                            tolerance, case, f"omega_bar_{j}", skip)


def _table_10_circ():
    base = replace(HOMOGENEOUS, shape="circle", h_r=CIRCLE_HOMOGENEOUS_H_R)
    yield from _circle_vibration("10circ", TABLE_10_CIRC, base, CIRCLE_DISTINCT_MODES, 0.005)


def _table_10_circ_fg():
    base = replace(AL_AL2O3_MT, shape="circle", h_r=0.2, n=1.0)
    # SS l/h=1 RPT row sits above its quasi-3D row, against every other SS row
    anomalous = {("SS", 1, "rpt")}
    yield from _circle_vibration("10circ-fg", TABLE_10_CIRC_FG, base, (1, 2, 3, 4, 5, 6), 0.007, anomalous)


def _table_11():
    base = Case(metal="Bench-2", ceramic="Bench-1")
    for row in _rows(TABLE_11):
        l_h, theory, values = _num(row[0]), row[1], row[2:]
        for i, v in enumerate(values):
            a_h, n = (5, 10, 20)[i // 3], (0, 1, 10)[i % 3]
            case = _buckling(base, "buckling_modulus", a_h=float(a_h), l_h=float(l_h), n=float(n),
                             **THEORIES[theory])
            yield Reference("11", (("l_h", l_h), ("a_h", a_h), ("n", n)), theory, float(v), 0.005,
                            case, "p_bar_1")


def _table_12():
    for row in _rows(TABLE_12):
        bc, a_h, l_h, values = row[0], _num(row[1]), _num(row[2]), row[3:]
        for i, v in enumerate(values):
            n, theory = (0, 1, 10)[i // 2], ("rpt", "quasi3d")[i % 2]
            case = _buckling(AL_AL2O3_MT, "buckling_rigidity", bc=bc, a_h=float(a_h), l_h=float(l_h),
                             n=float(n), **THEORIES[theory])
            yield Reference("12", (("bc", bc), ("a_h", a_h), ("l_h", l_h), ("n", n)), theory, float(v),
                            0.007, case, "p_bar_1")


def _table_13():
    base = Case(shape="circle", metal="Al", ceramic="ZrO2-2", variant="metal_top", bc="CC")
    for row in _rows(TABLE_13):
        n, theory, values = _num(row[0]), row[1], row[2:]
        for h_r, v in zip((0.1, 0.2, 0.25, 0.3), values):
            case = _buckling(base, "buckling_rigidity", h_r=h_r, n=float(n), **THEORIES[theory])
            yield Reference("13", (("n", n), ("h_r", h_r)), theory, float(v), 0.005, case, "p_bar_1")


def _table_14():
    base = replace(AL_AL2O3_MT, shape="circle")
    for row in _rows(TABLE_14):
        bc, h_r, l_h, values = row[0], _num(row[1]), _num(row[2]), row[3:]
        for i, v in enumerate(values):
            n, theory = (0, 1, 10)[i // 2], ("rpt", "quasi3d")[i % 2]
            case = _buckling(base, "buckling_rigidity", bc=bc, h_r=float(h_r), l_h=float(l_h),
                             n=float(n), **THEORIES[theory])
            yield Reference("14", (("bc", bc), ("h_r", h_r), ("l_h", l_h), ("n", n)), theory, float(v),
                            0.007, case, "p_bar_1")


def _table_12_modes():
    base = replace(AL_AL2O3_MT, n=10.0, l_h=0.2)
    make = lambda b, m, **kw: _buckling(b, "buckling_rigidity", m, **kw)
    yield from _six_modes("12-modes", TABLE_12_MODES, "a_h", base, make, 0.007)


def _table_14_modes():
    base = replace(AL_AL2O3_MT, shape="circle", n=1.0, l_h=0.6)
    make = lambda b, m, **kw: _buckling(b, "buckling_rigidity", m, **kw)
    yield from _six_modes("14-modes", TABLE_14_MODES, "h_r", base, make, 0.007)


FAMILIES = {
    "3": _table_3,
    "4": _table_4,
    "5": lambda: _microplate_bending("5", TABLE_5, "SSSS", with_load=False),
    "6": lambda: _microplate_bending("6", TABLE_6, "CCCC", with_load=True),
    "7": _table_7,
    "8": _table_8,
    "9": _table_9,
    "10": _table_10,
    "10circ": _table_10_circ,
    "10circ-fg": _table_10_circ_fg,
    "11": _table_11,
    "12": _table_12,
    "12-modes": _table_12_modes,
    "13": _table_13,
    "14": _table_14,
    "14-modes": _table_14_modes,
}


class UnknownTableError(KeyError):
    def __str__(self):
        return f"unknown reference table {self.args[0]!r}; known: {', '.join(FAMILIES)}"


def references(tables=None) -> list[Reference]:
    """References of the requested table ids (all when ``None``), in table order."""
    ids = list(FAMILIES) if tables is None else list(tables)
    for t in ids:
        if t not in FAMILIES:
            raise UnknownTableError(t)
    return [ref for t in ids for ref in FAMILIES[t]()]
