# Synthetic renewable availability: one block per day, T = 12,
# columns: period unit available_mw
0 w1 36.934354
0 w2 29.141417
0 w3 0.000000
1 w1 33.693101
1 w2 22.767479
1 w3 0.000000
2 w1 34.581061
2 w2 25.794205
2 w3 4.601172
3 w1 30.080973
3 w2 22.675282
3 w3 14.697654
4 w1 28.730536
4 w2 16.760957
4 w3 20.424039
5 w1 28.498430
5 w2 14.308248
5 w3 21.241991
6 w1 14.252870
6 w2 12.210070
6 w3 11.986363
7 w1 14.750393
7 w2 14.422247
7 w3 16.916828
8 w1 18.546049
8 w2 21.721967
8 w3 5.417843
9 w1 20.032620
9 w2 25.935989
9 w3 4.122522
10 w1 18.534742
10 w2 24.828853
10 w3 0.000000
11 w1 22.878528
11 w2 29.454329
11 w3 0.000000

0 w1 30.556057
0 w2 30.252905
0 w3 0.000000
1 w1 34.218423
1 w2 26.006097
1 w3 0.000000
2 w1 28.848819
2 w2 21.081493
2 w3 7.514716
3 w1 21.705802
3 w2 20.250135
3 w3 16.587941
4 w1 20.086625
4 w2 25.299654
4 w3 25.749994
5 w1 15.338656
5 w2 21.164408
5 w3 28.757152
6 w1 16.434217
6 w2 24.377235
6 w3 25.963391
7 w1 21.982723
7 w2 32.053562
7 w3 19.537856
8 w1 24.959683
8 w2 30.001572
8 w3 14.889079
9 w1 21.352561
9 w2 27.682656
9 w3 5.443447
10 w1 31.623541
10 w2 34.894221
10 w3 0.000000
11 w1 31.406513
11 w2 33.762025
11 w3 0.000000

0 w1 33.631670
0 w2 28.689926
0 w3 0.000000
1 w1 39.720167
1 w2 24.712703
1 w3 0.000000
2 w1 36.587406
2 w2 27.479625
2 w3 5.284216
3 w1 32.979113
3 w2 23.502827
3 w3 13.881075
4 w1 28.914463
4 w2 16.296402
4 w3 19.805287
5 w1 22.847099
5 w2 22.299937
5 w3 26.905910
6 w1 21.528994
6 w2 25.567666
6 w3 23.825530
7 w1 26.858049
7 w2 27.927042
7 w3 24.007347
8 w1 19.655138
8 w2 29.548211
8 w3 10.122327
9 w1 14.137719
9 w2 27.147387
9 w3 3.324014
10 w1 23.914914
10 w2 37.478740
10 w3 0.000000
11 w1 28.343327
11 w2 33.081116
11 w3 0.000000

0 w1 33.295623
0 w2 28.082987
0 w3 0.000000
1 w1 38.611993
1 w2 21.488642
1 w3 0.000000
2 w1 37.002314
2 w2 16.302176
2 w3 6.380009
3 w1 29.038750
3 w2 19.639301
3 w3 15.959623
4 w1 27.697277
4 w2 16.452154
4 w3 20.904262
5 w1 14.426290
5 w2 11.668079
5 w3 24.345101
6 w1 5.046450
6 w2 17.867570
6 w3 14.550233
7 w1 15.353198
7 w2 19.462038
7 w3 20.787618
8 w1 19.378566
8 w2 19.098577
8 w3 18.691336
9 w1 30.064581
9 w2 26.988027
9 w3 6.556357
10 w1 31.035169
10 w2 25.743286
10 w3 0.000000
11 w1 31.197794
11 w2 26.787246
11 w3 0.000000

0 w1 31.830511
0 w2 20.489429
0 w3 0.000000
1 w1 33.487010
1 w2 24.419279
1 w3 0.000000
2 w1 30.901451
2 w2 19.340973
2 w3 5.360184
3 w1 30.392703
3 w2 16.666246
3 w3 13.296237
4 w1 20.730913
4 w2 12.467315
4 w3 26.453504
5 w1 16.729251
5 w2 11.116638
5 w3 27.751556
6 w1 23.923344
6 w2 13.203591
6 w3 24.806509
7 w1 18.208537
7 w2 13.178209
7 w3 23.735934
8 w1 19.391549
8 w2 22.090923
8 w3 13.448965
9 w1 25.511150
9 w2 25.493992
9 w3 5.478900
10 w1 23.602058
10 w2 22.647368
10 w3 0.000000
11 w1 26.901530
11 w2 26.114824
11 w3 0.000000

0 w1 30.308152
0 w2 23.037404
0 w3 0.000000
1 w1 32.229309
1 w2 21.154905
1 w3 0.000000
2 w1 39.156228
2 w2 23.716603
2 w3 7.024046
3 w1 32.622132
3 w2 14.855200
3 w3 18.602430
4 w1 33.455827
4 w2 17.060320
4 w3 26.018667
5 w1 31.565460
5 w2 23.164510
5 w3 31.931886
6 w1 24.274795
6 w2 29.270548
6 w3 21.595413
7 w1 27.879083
7 w2 31.631058
7 w3 24.497042
8 w1 36.529216
8 w2 39.610883
8 w3 13.383660
9 w1 26.409583
9 w2 37.953513
9 w3 3.995238
10 w1 31.132914
10 w2 38.094203
10 w3 0.000000
11 w1 24.959976
11 w2 32.273206
11 w3 0.000000

0 w1 30.986806
0 w2 28.312041
0 w3 0.000000
1 w1 27.203765
1 w2 22.323663
1 w3 0.000000
2 w1 22.438325
2 w2 19.928251
2 w3 4.536699
3 w1 27.804241
3 w2 14.553546
3 w3 11.291100
4 w1 20.940830
4 w2 11.396259
4 w3 18.854282
5 w1 16.152116
5 w2 15.841283
5 w3 24.358995
6 w1 27.285945
6 w2 16.504102
6 w3 29.166480
7 w1 23.183354
7 w2 22.360837
7 w3 16.532489
8 w1 21.091777
8 w2 29.039781
8 w3 13.283749
9 w1 25.446234
9 w2 29.577283
9 w3 7.347589
10 w1 29.510707
10 w2 22.233106
10 w3 0.000000
11 w1 22.791044
11 w2 11.012136
11 w3 0.000000

0 w1 35.033075
0 w2 19.470689
0 w3 0.000000
1 w1 31.188016
1 w2 23.799361
1 w3 0.000000
2 w1 33.271528
2 w2 20.817316
2 w3 5.685837
3 w1 35.868022
3 w2 22.053427
3 w3 15.794897
4 w1 26.094268
4 w2 20.943168
4 w3 18.131925
5 w1 29.563972
5 w2 16.988059
5 w3 21.923021
6 w1 24.643216
6 w2 15.756845
6 w3 31.280114
7 w1 29.385920
7 w2 21.962558
7 w3 27.840665
8 w1 28.647753
8 w2 17.435682
8 w3 17.569432
9 w1 27.439516
9 w2 25.514779
9 w3 4.922685
10 w1 28.859827
10 w2 27.748034
10 w3 0.000000
11 w1 34.638544
11 w2 28.877314
11 w3 0.000000

0 w1 34.338308
0 w2 25.229179
0 w3 0.000000
1 w1 44.074734
1 w2 29.011421
1 w3 0.000000
2 w1 44.115227
2 w2 25.617472
2 w3 6.889912
3 w1 37.145014
3 w2 20.993255
3 w3 15.926366
4 w1 39.437581
4 w2 23.730550
4 w3 22.171230
5 w1 28.885028
5 w2 19.654858
5 w3 32.174873
6 w1 27.173375
6 w2 22.975928
6 w3 26.210490
7 w1 18.832592
7 w2 24.164474
7 w3 25.257644
8 w1 19.262595
8 w2 26.041376
8 w3 15.496677
9 w1 24.208083
9 w2 23.026022
9 w3 5.592319
10 w1 23.846202
10 w2 29.650339
10 w3 0.000000
11 w1 33.331937
11 w2 35.636818
11 w3 0.000000

0 w1 34.232971
0 w2 30.686144
0 w3 0.000000
1 w1 31.885308
1 w2 26.736994
1 w3 0.000000
2 w1 32.491687
2 w2 21.393296
2 w3 5.599595
3 w1 33.079520
3 w2 14.841307
3 w3 10.782273
4 w1 35.271755
4 w2 14.540431
4 w3 23.517243
5 w1 35.963809
5 w2 20.730212
5 w3 28.958768
6 w1 38.428942
6 w2 24.692899
6 w3 24.152495
7 w1 24.016887
7 w2 25.864574
7 w3 27.070117
8 w1 29.087133
8 w2 26.118091
8 w3 14.290733
9 w1 26.552340
9 w2 30.150398
9 w3 5.505878
10 w1 31.370338
10 w2 32.402103
10 w3 0.000000
11 w1 34.728079
11 w2 31.725003
11 w3 0.000000

0 w1 40.037357
0 w2 36.554054
0 w3 0.000000
1 w1 41.058344
1 w2 23.109167
1 w3 0.000000
2 w1 28.640546
2 w2 13.537772
2 w3 7.205922
3 w1 31.915186
3 w2 15.317675
3 w3 10.791152
4 w1 26.435838
4 w2 13.587967
4 w3 20.869718
5 w1 34.651859
5 w2 20.406755
5 w3 21.222387
6 w1 22.052925
6 w2 21.236469
6 w3 21.237418
7 w1 15.586583
7 w2 23.615187
7 w3 14.284213
8 w1 24.931852
8 w2 32.286480
8 w3 16.960147
9 w1 25.188588
9 w2 33.852861
9 w3 6.189890
10 w1 28.066752
10 w2 31.015752
10 w3 0.000000
11 w1 25.719364
11 w2 31.378576
11 w3 0.000000

0 w1 33.603781
0 w2 32.143244
0 w3 0.000000
1 w1 32.768823
1 w2 26.586938
1 w3 0.000000
2 w1 32.364051
2 w2 25.933282
2 w3 5.977327
3 w1 25.914466
3 w2 16.470756
3 w3 16.989279
4 w1 27.455477
4 w2 10.126222
4 w3 27.820202
5 w1 26.481425
5 w2 21.047612
5 w3 26.344263
6 w1 22.013520
6 w2 17.999560
6 w3 37.320975
7 w1 20.040622
7 w2 28.779146
7 w3 23.844152
8 w1 23.285738
8 w2 23.583307
8 w3 14.334208
9 w1 30.484356
9 w2 24.405654
9 w3 7.469521
10 w1 33.428772
10 w2 24.812972
10 w3 0.000000
11 w1 32.817118
11 w2 26.582247
11 w3 0.000000

0 w1 31.689440
0 w2 23.962365
0 w3 0.000000
1 w1 28.166343
1 w2 20.914640
1 w3 0.000000
2 w1 23.362163
2 w2 17.506106
2 w3 4.878431
3 w1 21.091214
3 w2 18.772610
3 w3 12.077097
4 w1 30.262772
4 w2 16.480504
4 w3 21.348954
5 w1 24.693172
5 w2 15.411013
5 w3 26.753867
6 w1 21.029024
6 w2 21.835672
6 w3 25.146619
7 w1 15.426853
7 w2 23.094647
7 w3 21.164946
8 w1 24.010712
8 w2 24.318696
8 w3 15.022482
9 w1 17.446846
9 w2 28.835275
9 w3 4.208329
10 w1 16.093858
10 w2 27.378571
10 w3 0.000000
11 w1 18.276709
11 w2 21.514429
11 w3 0.000000

0 w1 21.547694
0 w2 22.745256
0 w3 0.000000
1 w1 25.276304
1 w2 22.748210
1 w3 0.000000
2 w1 31.812597
2 w2 16.872555
2 w3 3.249272
3 w1 21.368239
3 w2 21.812084
3 w3 11.073085
4 w1 24.523228
4 w2 19.369928
4 w3 19.404089
5 w1 23.282449
5 w2 26.979214
5 w3 18.667942
6 w1 14.686754
6 w2 19.683414
6 w3 13.673104
7 w1 20.833463
7 w2 27.331782
7 w3 13.214130
8 w1 15.769496
8 w2 26.068892
8 w3 16.441162
9 w1 7.644499
9 w2 27.389248
9 w3 4.328641
10 w1 24.755447
10 w2 25.557140
10 w3 0.000000
11 w1 22.903743
11 w2 21.602558
11 w3 0.000000

0 w1 33.853956
0 w2 22.445069
0 w3 0.000000
1 w1 26.145762
1 w2 18.251116
1 w3 0.000000
2 w1 29.144490
2 w2 17.408134
2 w3 4.003863
3 w1 28.813605
3 w2 16.782660
3 w3 17.218556
4 w1 36.103502
4 w2 18.874840
4 w3 19.734434
5 w1 29.016370
5 w2 17.735378
5 w3 19.336852
6 w1 24.178991
6 w2 17.107437
6 w3 24.548502
7 w1 21.477809
7 w2 23.453851
7 w3 20.436708
8 w1 18.955051
8 w2 22.703617
8 w3 13.567603
9 w1 20.329940
9 w2 27.518487
9 w3 5.643845
10 w1 19.735225
10 w2 27.919634
10 w3 0.000000
11 w1 24.886940
11 w2 26.136069
11 w3 0.000000

0 w1 31.866047
0 w2 26.072647
0 w3 0.000000
1 w1 32.853309
1 w2 21.777584
1 w3 0.000000
2 w1 32.346219
2 w2 17.627131
2 w3 4.903019
3 w1 24.912620
3 w2 16.778157
3 w3 14.042645
4 w1 23.915915
4 w2 15.059788
4 w3 22.670135
5 w1 13.838218
5 w2 17.203816
5 w3 25.405061
6 w1 17.474694
6 w2 21.724309
6 w3 21.612405
7 w1 17.589832
7 w2 26.623448
7 w3 22.068502
8 w1 21.882699
8 w2 22.999251
8 w3 16.815443
9 w1 30.568258
9 w2 32.875702
9 w3 7.006004
10 w1 25.059092
10 w2 34.359451
10 w3 0.000000
11 w1 19.039834
11 w2 29.959968
11 w3 0.000000

0 w1 22.188386
0 w2 22.945880
0 w3 0.000000
1 w1 27.407109
1 w2 22.118615
1 w3 0.000000
2 w1 38.712089
2 w2 21.399827
2 w3 7.128465
3 w1 28.601762
3 w2 15.455002
3 w3 16.925770
4 w1 28.466017
4 w2 17.375609
4 w3 26.838242
5 w1 21.091421
5 w2 17.752661
5 w3 30.263150
6 w1 23.036409
6 w2 25.447701
6 w3 29.526289
7 w1 20.864487
7 w2 27.732340
7 w3 18.697791
8 w1 14.591510
8 w2 29.541848
8 w3 13.659303
9 w1 23.070622
9 w2 24.316479
9 w3 5.041722
10 w1 24.654597
10 w2 23.855231
10 w3 0.000000
11 w1 28.492565
11 w2 29.303709
11 w3 0.000000

0 w1 30.782826
0 w2 26.423403
0 w3 0.000000
1 w1 20.620878
1 w2 20.030695
1 w3 0.000000
2 w1 30.159166
2 w2 25.711211
2 w3 8.252981
3 w1 32.303745
3 w2 22.753577
3 w3 19.983587
4 w1 26.739141
4 w2 19.565764
4 w3 27.848727
5 w1 34.064474
5 w2 21.619244
5 w3 28.186607
6 w1 28.726583
6 w2 28.787339
6 w3 26.334471
7 w1 33.305345
7 w2 26.830278
7 w3 21.438236
8 w1 28.527696
8 w2 32.401997
8 w3 18.692401
9 w1 22.003772
9 w2 27.443129
9 w3 6.929497
10 w1 24.164479
10 w2 22.768083
10 w3 0.000000
11 w1 32.231324
11 w2 28.181330
11 w3 0.000000

0 w1 40.848271
0 w2 27.198491
0 w3 0.000000
1 w1 35.497523
1 w2 20.496958
1 w3 0.000000
2 w1 31.477300
2 w2 21.322879
2 w3 6.762553
3 w1 26.302507
3 w2 18.286901
3 w3 14.317727
4 w1 30.155925
4 w2 16.434218
4 w3 18.823564
5 w1 31.821220
5 w2 28.526348
5 w3 34.461732
6 w1 27.679896
6 w2 27.644772
6 w3 36.582174
7 w1 24.617877
7 w2 24.242472
7 w3 26.139346
8 w1 26.674522
8 w2 25.166767
8 w3 11.253591
9 w1 20.443697
9 w2 29.825151
9 w3 3.962643
10 w1 26.190923
10 w2 31.100352
10 w3 0.000000
11 w1 30.243038
11 w2 31.503642
11 w3 0.000000

0 w1 33.216740
0 w2 24.070322
0 w3 0.000000
1 w1 35.332069
1 w2 19.944110
1 w3 0.000000
2 w1 33.720213
2 w2 21.708246
2 w3 3.581701
3 w1 27.013107
3 w2 16.765247
3 w3 20.464124
4 w1 30.555778
4 w2 17.755081
4 w3 27.925495
5 w1 36.437244
5 w2 20.793971
5 w3 26.639541
6 w1 34.995764
6 w2 26.503031
6 w3 29.388184
7 w1 26.579949
7 w2 34.747074
7 w3 31.179868
8 w1 29.638892
8 w2 36.456875
8 w3 12.073522
9 w1 33.857561
9 w2 34.869464
9 w3 6.121526
10 w1 38.318119
10 w2 33.356205
10 w3 0.000000
11 w1 40.708864
11 w2 29.519124
11 w3 0.000000

0 w1 37.510901
0 w2 26.062077
0 w3 0.000000
1 w1 44.162979
1 w2 26.495375
1 w3 0.000000
2 w1 50.403973
2 w2 25.604138
2 w3 3.588235
3 w1 37.392756
3 w2 16.790448
3 w3 10.381716
4 w1 31.887581
4 w2 10.166154
4 w3 19.069992
5 w1 18.382155
5 w2 14.829975
5 w3 21.802607
6 w1 16.692092
6 w2 18.370450
6 w3 20.092276
7 w1 14.975111
7 w2 15.620969
7 w3 18.484836
8 w1 27.263398
8 w2 32.632620
8 w3 19.586920
9 w1 32.413466
9 w2 31.046403
9 w3 9.117058
10 w1 33.353050
10 w2 31.505422
10 w3 0.000000
11 w1 36.367165
11 w2 29.113139
11 w3 0.000000

0 w1 32.671772
0 w2 24.882663
0 w3 0.000000
1 w1 34.921325
1 w2 22.174736
1 w3 0.000000
2 w1 38.422383
2 w2 16.990208
2 w3 6.686058
3 w1 38.786954
3 w2 19.526145
3 w3 16.446911
4 w1 40.368200
4 w2 18.446119
4 w3 22.732859
5 w1 29.032982
5 w2 25.253055
5 w3 15.298640
6 w1 22.070379
6 w2 22.095410
6 w3 22.902505
7 w1 24.492524
7 w2 31.034867
7 w3 14.269310
8 w1 28.949418
8 w2 30.958440
8 w3 10.775909
9 w1 32.300340
9 w2 29.187994
9 w3 2.024324
10 w1 31.488075
10 w2 24.739751
10 w3 0.000000
11 w1 35.893684
11 w2 28.797646
11 w3 0.000000

0 w1 36.796642
0 w2 21.331536
0 w3 0.000000
1 w1 32.497162
1 w2 15.907162
1 w3 0.000000
2 w1 29.538876
2 w2 8.781947
2 w3 6.725406
3 w1 27.726481
3 w2 13.949797
3 w3 16.113978
4 w1 28.976082
4 w2 16.574525
4 w3 27.500330
5 w1 27.258575
5 w2 20.531593
5 w3 29.752815
6 w1 16.571792
6 w2 20.068246
6 w3 24.471967
7 w1 19.221262
7 w2 18.682732
7 w3 28.128873
8 w1 21.275776
8 w2 20.166700
8 w3 11.497872
9 w1 22.626589
9 w2 25.484833
9 w3 4.162474
10 w1 28.016278
10 w2 26.092408
10 w3 0.000000
11 w1 28.672795
11 w2 26.599040
11 w3 0.000000

0 w1 46.406946
0 w2 25.101584
0 w3 0.000000
1 w1 38.651828
1 w2 26.142435
1 w3 0.000000
2 w1 35.007728
2 w2 21.918755
2 w3 3.716142
3 w1 28.146958
3 w2 16.676663
3 w3 5.429962
4 w1 19.162538
4 w2 13.751202
4 w3 15.002510
5 w1 18.454496
5 w2 9.493906
5 w3 17.835612
6 w1 21.625215
6 w2 19.441290
6 w3 21.442742
7 w1 16.447692
7 w2 24.971788
7 w3 17.208672
8 w1 14.168259
8 w2 23.166501
8 w3 17.911389
9 w1 21.599767
9 w2 31.897197
9 w3 6.042684
10 w1 32.483249
10 w2 30.399493
10 w3 0.000000
11 w1 47.722475
11 w2 35.965700
11 w3 0.000000

0 w1 44.772663
0 w2 32.906019
0 w3 0.000000
1 w1 40.482040
1 w2 20.723645
1 w3 0.000000
2 w1 37.835708
2 w2 20.457106
2 w3 8.005053
3 w1 35.889701
3 w2 22.572399
3 w3 13.680745
4 w1 35.724912
4 w2 29.545363
4 w3 24.724438
5 w1 31.734651
5 w2 26.334772
5 w3 35.130448
6 w1 22.406313
6 w2 24.095922
6 w3 30.823195
7 w1 25.615980
7 w2 25.229435
7 w3 25.271867
8 w1 23.699657
8 w2 28.472323
8 w3 15.914639
9 w1 20.696395
9 w2 29.022020
9 w3 7.319089
10 w1 22.101159
10 w2 27.993134
10 w3 0.000000
11 w1 23.930454
11 w2 27.600259
11 w3 0.000000

0 w1 36.738619
0 w2 36.244323
0 w3 0.000000
1 w1 37.830365
1 w2 31.671431
1 w3 0.000000
2 w1 38.179363
2 w2 31.353251
2 w3 4.921931
3 w1 41.133767
3 w2 25.640020
3 w3 18.881390
4 w1 35.589260
4 w2 20.032575
4 w3 24.481395
5 w1 32.883000
5 w2 21.697474
5 w3 28.634014
6 w1 24.485774
6 w2 14.618933
6 w3 29.575347
7 w1 25.350853
7 w2 22.804365
7 w3 23.882763
8 w1 29.821790
8 w2 26.615984
8 w3 13.869041
9 w1 28.596745
9 w2 34.247190
9 w3 3.806667
10 w1 37.893739
10 w2 32.182673
10 w3 0.000000
11 w1 44.789700
11 w2 32.435053
11 w3 0.000000

0 w1 41.348736
0 w2 32.932181
0 w3 0.000000
1 w1 38.912322
1 w2 28.786907
1 w3 0.000000
2 w1 34.680211
2 w2 24.533022
2 w3 6.470358
3 w1 30.400110
3 w2 18.405341
3 w3 15.389097
4 w1 27.994515
4 w2 15.948406
4 w3 19.163516
5 w1 30.082220
5 w2 20.301616
5 w3 28.190341
6 w1 31.388350
6 w2 26.199212
6 w3 38.211036
7 w1 22.972486
7 w2 29.726195
7 w3 25.117583
8 w1 33.476355
8 w2 39.140742
8 w3 10.983881
9 w1 28.270768
9 w2 37.804632
9 w3 6.281964
10 w1 35.882804
10 w2 35.563041
10 w3 0.000000
11 w1 41.071029
11 w2 33.340660
11 w3 0.000000

0 w1 29.912847
0 w2 29.731805
0 w3 0.000000
1 w1 39.151419
1 w2 25.694729
1 w3 0.000000
2 w1 39.517835
2 w2 19.392311
2 w3 3.873779
3 w1 27.261865
3 w2 16.683076
3 w3 13.998224
4 w1 31.019059
4 w2 17.695206
4 w3 25.477771
5 w1 26.487188
5 w2 18.882257
5 w3 29.160494
6 w1 28.516515
6 w2 21.537625
6 w3 25.500641
7 w1 24.132641
7 w2 25.240104
7 w3 17.530252
8 w1 29.414793
8 w2 27.962282
8 w3 15.611543
9 w1 25.356570
9 w2 30.961787
9 w3 6.623615
10 w1 27.638411
10 w2 38.548043
10 w3 0.000000
11 w1 42.529276
11 w2 39.611188
11 w3 0.000000

0 w1 40.885250
0 w2 34.458827
0 w3 0.000000
1 w1 41.231035
1 w2 27.449929
1 w3 0.000000
2 w1 37.884350
2 w2 14.697420
2 w3 5.054646
3 w1 29.982769
3 w2 12.612625
3 w3 12.933146
4 w1 28.254982
4 w2 10.010306
4 w3 11.573601
5 w1 18.586199
5 w2 6.127304
5 w3 12.991896
6 w1 25.239053
6 w2 12.564630
6 w3 22.758801
7 w1 15.154396
7 w2 19.916427
7 w3 18.561016
8 w1 18.372204
8 w2 27.118637
8 w3 20.063967
9 w1 24.278585
9 w2 30.162868
9 w3 5.629929
10 w1 31.965760
10 w2 30.634243
10 w3 0.000000
11 w1 34.816916
11 w2 36.729317
11 w3 0.000000

0 w1 36.711156
0 w2 34.326465
0 w3 0.000000
1 w1 34.710567
1 w2 26.184198
1 w3 0.000000
2 w1 35.861808
2 w2 31.836529
2 w3 6.699133
3 w1 29.098003
3 w2 19.990595
3 w3 13.789397
4 w1 32.349326
4 w2 16.850350
4 w3 17.355798
5 w1 31.447170
5 w2 23.240383
5 w3 21.024532
6 w1 20.908490
6 w2 16.812121
6 w3 17.973686
7 w1 9.009052
7 w2 22.452105
7 w3 15.037814
8 w1 18.014757
8 w2 33.601257
8 w3 17.484722
9 w1 18.163111
9 w2 34.608612
9 w3 8.154620
10 w1 22.509486
10 w2 28.171492
10 w3 0.000000
11 w1 21.519537
11 w2 31.992764
11 w3 0.000000

0 w1 24.754488
0 w2 25.742792
0 w3 0.000000
1 w1 31.852926
1 w2 24.327409
1 w3 0.000000
2 w1 39.147671
2 w2 14.471216
2 w3 5.399107
3 w1 30.706687
3 w2 15.829639
3 w3 14.924273
4 w1 23.132757
4 w2 13.262224
4 w3 23.870659
5 w1 23.251076
5 w2 14.318661
5 w3 35.710587
6 w1 32.420128
6 w2 16.272088
6 w3 31.427405
7 w1 38.970566
7 w2 28.736297
7 w3 26.324104
8 w1 31.832361
8 w2 28.639531
8 w3 15.861360
9 w1 28.144604
9 w2 33.258108
9 w3 5.582951
10 w1 29.356519
10 w2 27.551698
10 w3 0.000000
11 w1 28.744439
11 w2 26.668174
11 w3 0.000000

0 w1 35.426272
0 w2 28.264674
0 w3 0.000000
1 w1 37.502901
1 w2 24.621371
1 w3 0.000000
2 w1 40.403055
2 w2 18.552616
2 w3 8.019702
3 w1 35.650636
3 w2 15.486581
3 w3 15.227733
4 w1 26.983239
4 w2 16.745928
4 w3 17.682652
5 w1 29.769679
5 w2 16.871752
5 w3 11.097757
6 w1 21.123616
6 w2 12.233985
6 w3 16.867756
7 w1 25.003538
7 w2 23.734992
7 w3 12.885925
8 w1 20.754341
8 w2 33.431849
8 w3 13.544485
9 w1 25.424974
9 w2 36.798380
9 w3 9.469841
10 w1 36.991880
10 w2 36.352175
10 w3 0.000000
11 w1 41.599955
11 w2 31.722307
11 w3 0.000000

0 w1 41.561193
0 w2 25.698086
0 w3 0.000000
1 w1 40.741020
1 w2 33.193731
1 w3 0.000000
2 w1 38.851036
2 w2 25.499204
2 w3 6.081897
3 w1 40.728580
3 w2 21.061014
3 w3 12.618194
4 w1 25.654312
4 w2 14.556189
4 w3 20.889618
5 w1 23.282630
5 w2 13.483945
5 w3 21.700538
6 w1 20.944620
6 w2 20.625821
6 w3 20.166847
7 w1 19.406080
7 w2 16.937538
7 w3 13.623624
8 w1 28.725912
8 w2 17.394604
8 w3 11.463635
9 w1 28.880080
9 w2 24.089930
9 w3 4.065453
10 w1 30.515373
10 w2 28.038973
10 w3 0.000000
11 w1 24.524766
11 w2 25.932912
11 w3 0.000000

0 w1 28.445240
0 w2 25.470762
0 w3 0.000000
1 w1 37.502102
1 w2 22.374413
1 w3 0.000000
2 w1 42.194799
2 w2 26.400948
2 w3 9.021860
3 w1 36.718334
3 w2 21.502120
3 w3 20.603042
4 w1 24.874746
4 w2 19.182410
4 w3 21.523371
5 w1 21.359966
5 w2 12.479294
5 w3 18.920393
6 w1 19.501739
6 w2 21.406290
6 w3 27.046363
7 w1 19.560622
7 w2 23.655991
7 w3 18.401743
8 w1 23.573920
8 w2 26.710006
8 w3 16.199380
9 w1 34.873353
9 w2 31.561780
9 w3 4.275830
10 w1 30.746795
10 w2 25.653752
10 w3 0.000000
11 w1 40.268810
11 w2 30.002026
11 w3 0.000000

0 w1 43.619944
0 w2 33.897783
0 w3 0.000000
1 w1 39.037726
1 w2 26.278623
1 w3 0.000000
2 w1 40.858631
2 w2 27.984742
2 w3 7.795733
3 w1 42.836847
3 w2 29.667012
3 w3 19.664479
4 w1 28.438628
4 w2 22.160325
4 w3 24.531874
5 w1 23.620655
5 w2 24.301480
5 w3 24.123985
6 w1 17.696626
6 w2 28.496736
6 w3 27.494566
7 w1 20.952017
7 w2 31.703558
7 w3 27.536702
8 w1 25.038530
8 w2 22.316113
8 w3 14.462292
9 w1 24.088322
9 w2 23.176713
9 w3 6.008911
10 w1 34.032158
10 w2 26.948294
10 w3 0.000000
11 w1 45.851398
11 w2 29.139423
11 w3 0.000000

0 w1 44.502767
0 w2 30.139639
0 w3 0.000000
1 w1 46.385733
1 w2 25.643643
1 w3 0.000000
2 w1 42.513766
2 w2 26.013885
2 w3 4.175440
3 w1 39.226923
3 w2 22.208275
3 w3 22.528808
4 w1 29.632563
4 w2 24.968127
4 w3 25.524426
5 w1 25.910115
5 w2 25.365979
5 w3 31.037027
6 w1 30.052705
6 w2 27.549787
6 w3 24.897458
7 w1 23.844992
7 w2 29.521209
7 w3 23.876559
8 w1 31.641948
8 w2 33.652974
8 w3 19.983485
9 w1 39.004060
9 w2 36.020093
9 w3 5.053874
10 w1 31.983840
10 w2 27.842792
10 w3 0.000000
11 w1 30.459418
11 w2 32.428032
11 w3 0.000000

0 w1 43.836214
0 w2 34.775227
0 w3 0.000000
1 w1 41.646157
1 w2 28.914669
1 w3 0.000000
2 w1 36.769205
2 w2 23.429295
2 w3 8.610001
3 w1 25.580521
3 w2 19.452081
3 w3 14.114957
4 w1 26.260501
4 w2 21.714400
4 w3 20.561157
5 w1 28.147510
5 w2 15.782863
5 w3 29.177484
6 w1 20.734658
6 w2 21.778151
6 w3 27.178500
7 w1 7.759032
7 w2 18.751867
7 w3 21.833514
8 w1 22.228128
8 w2 26.925429
8 w3 16.701264
9 w1 18.338240
9 w2 33.370559
9 w3 8.983293
10 w1 26.325708
10 w2 31.292601
10 w3 0.000000
11 w1 36.432320
11 w2 41.478524
11 w3 0.000000

0 w1 45.994793
0 w2 37.381772
0 w3 0.000000
1 w1 50.842709
1 w2 27.164317
1 w3 0.000000
2 w1 45.656492
2 w2 27.607683
2 w3 6.491581
3 w1 41.435691
3 w2 20.724848
3 w3 11.207855
4 w1 34.512159
4 w2 17.300230
4 w3 12.626565
5 w1 21.939484
5 w2 15.853394
5 w3 9.525298
6 w1 13.607363
6 w2 11.908653
6 w3 17.109591
7 w1 17.573064
7 w2 27.496946
7 w3 12.423627
8 w1 17.551115
8 w2 31.631936
8 w3 11.456693
9 w1 21.782627
9 w2 37.788175
9 w3 4.910622
10 w1 22.848474
10 w2 28.113543
10 w3 0.000000
11 w1 31.232061
11 w2 23.427434
11 w3 0.000000

0 w1 37.233310
0 w2 27.282857
0 w3 0.000000
1 w1 41.189247
1 w2 27.589673
1 w3 0.000000
2 w1 37.445679
2 w2 24.708490
2 w3 3.701279
3 w1 23.928514
3 w2 17.544578
3 w3 14.412627
4 w1 32.080302
4 w2 10.762783
4 w3 32.296466
5 w1 20.478832
5 w2 18.117383
5 w3 35.790296
6 w1 24.739433
6 w2 22.553941
6 w3 23.985475
7 w1 26.119236
7 w2 23.406414
7 w3 9.775542
8 w1 39.282672
8 w2 33.563462
8 w3 18.354260
9 w1 31.053300
9 w2 38.521066
9 w3 9.077271
10 w1 41.592677
10 w2 37.270409
10 w3 0.000000
11 w1 40.273209
11 w2 25.455282
11 w3 0.000000

0 w1 40.245553
0 w2 22.358441
0 w3 0.000000
1 w1 38.574349
1 w2 29.627916
1 w3 0.000000
2 w1 37.598222
2 w2 28.909736
2 w3 5.591827
3 w1 33.547742
3 w2 26.370515
3 w3 10.639308
4 w1 29.177188
4 w2 16.879586
4 w3 18.286967
5 w1 33.444980
5 w2 17.780181
5 w3 24.310563
6 w1 22.426968
6 w2 16.001460
6 w3 16.997753
7 w1 28.169287
7 w2 32.719643
7 w3 21.811345
8 w1 23.848395
8 w2 34.084799
8 w3 14.107311
9 w1 31.194721
9 w2 35.360293
9 w3 6.385960
10 w1 36.538994
10 w2 32.432057
10 w3 0.000000
11 w1 29.169226
11 w2 27.579116
11 w3 0.000000

0 w1 33.220742
0 w2 22.554608
0 w3 0.000000
1 w1 37.546419
1 w2 17.165071
1 w3 0.000000
2 w1 30.982808
2 w2 19.769969
2 w3 7.663438
3 w1 34.708962
3 w2 17.996873
3 w3 21.640386
4 w1 22.593519
4 w2 22.046143
4 w3 21.958375
5 w1 8.405737
5 w2 27.631379
5 w3 32.048624
6 w1 9.213975
6 w2 24.194368
6 w3 26.073370
7 w1 15.163598
7 w2 19.673088
7 w3 18.336412
8 w1 20.985718
8 w2 26.310322
8 w3 18.256297
9 w1 25.040198
9 w2 38.277563
9 w3 5.871295
10 w1 31.778947
10 w2 27.978274
10 w3 0.000000
11 w1 41.243335
11 w2 26.795867
11 w3 0.000000

0 w1 40.178148
0 w2 22.703561
0 w3 0.000000
1 w1 36.554246
1 w2 20.083027
1 w3 0.000000
2 w1 38.780140
2 w2 18.028483
2 w3 4.994698
3 w1 35.933812
3 w2 17.893783
3 w3 17.440831
4 w1 44.101306
4 w2 24.571479
4 w3 23.815928
5 w1 33.591934
5 w2 20.016681
5 w3 20.439450
6 w1 22.256887
6 w2 19.879699
6 w3 19.576452
7 w1 25.005415
7 w2 23.257689
7 w3 18.564854
8 w1 18.415616
8 w2 32.134563
8 w3 15.852747
9 w1 32.900287
9 w2 37.152809
9 w3 8.747669
10 w1 33.422302
10 w2 37.358273
10 w3 0.000000
11 w1 30.559378
11 w2 36.614431
11 w3 0.000000

0 w1 37.943784
0 w2 34.414157
0 w3 0.000000
1 w1 36.008863
1 w2 29.060463
1 w3 0.000000
2 w1 32.884401
2 w2 20.663413
2 w3 5.848188
3 w1 32.357713
3 w2 20.823303
3 w3 10.260233
4 w1 39.358051
4 w2 26.352811
4 w3 22.714562
5 w1 30.233378
5 w2 23.290928
5 w3 27.493174
6 w1 27.943239
6 w2 17.953048
6 w3 28.985198
7 w1 39.114662
7 w2 19.649860
7 w3 28.252061
8 w1 33.708603
8 w2 26.437890
8 w3 22.097677
9 w1 25.586998
9 w2 29.277131
9 w3 9.523685
10 w1 28.647479
10 w2 28.633576
10 w3 0.000000
11 w1 30.676534
11 w2 34.442154
11 w3 0.000000

0 w1 40.115703
0 w2 26.076944
0 w3 0.000000
1 w1 38.973746
1 w2 13.981660
1 w3 0.000000
2 w1 30.602552
2 w2 13.494042
2 w3 8.154460
3 w1 23.714742
3 w2 9.608744
3 w3 21.339124
4 w1 23.664705
4 w2 19.434176
4 w3 26.952025
5 w1 18.034536
5 w2 18.266889
5 w3 32.944689
6 w1 23.336198
6 w2 21.886215
6 w3 28.772637
7 w1 21.552695
7 w2 22.552084
7 w3 31.514038
8 w1 22.556756
8 w2 22.318908
8 w3 16.584589
9 w1 28.740690
9 w2 30.735546
9 w3 6.298876
10 w1 28.138519
10 w2 30.714192
10 w3 0.000000
11 w1 26.248243
11 w2 31.462243
11 w3 0.000000

0 w1 34.750418
0 w2 33.379102
0 w3 0.000000
1 w1 37.580554
1 w2 35.924407
1 w3 0.000000
2 w1 36.240757
2 w2 29.870114
2 w3 7.282382
3 w1 30.205739
3 w2 22.925165
3 w3 15.441890
4 w1 18.195559
4 w2 17.215615
4 w3 19.003296
5 w1 17.031313
5 w2 11.162589
5 w3 20.273629
6 w1 16.854851
6 w2 17.456287
6 w3 16.433982
7 w1 21.263849
7 w2 18.342089
7 w3 16.848603
8 w1 28.542968
8 w2 23.518028
8 w3 12.181305
9 w1 33.965663
9 w2 28.123215
9 w3 5.091157
10 w1 35.258791
10 w2 34.861149
10 w3 0.000000
11 w1 33.119123
11 w2 27.492906
11 w3 0.000000

0 w1 31.716898
0 w2 22.251202
0 w3 0.000000
1 w1 29.854544
1 w2 21.176723
1 w3 0.000000
2 w1 28.230027
2 w2 19.180227
2 w3 8.345035
3 w1 30.513801
3 w2 15.741732
3 w3 17.054558
4 w1 22.885116
4 w2 16.677780
4 w3 25.870547
5 w1 17.606815
5 w2 16.365494
5 w3 31.731982
6 w1 15.483322
6 w2 19.866493
6 w3 21.997889
7 w1 13.375722
7 w2 20.446033
7 w3 29.373452
8 w1 15.713947
8 w2 22.658009
8 w3 15.655734
9 w1 20.457422
9 w2 29.358402
9 w3 6.463526
10 w1 37.135937
10 w2 33.511565
10 w3 0.000000
11 w1 39.622266
11 w2 34.551440
11 w3 0.000000

0 w1 39.929563
0 w2 30.121910
0 w3 0.000000
1 w1 29.151594
1 w2 27.029836
1 w3 0.000000
2 w1 30.124953
2 w2 20.949262
2 w3 5.051667
3 w1 32.162362
3 w2 14.481639
3 w3 10.838995
4 w1 29.777190
4 w2 17.125555
4 w3 16.943656
5 w1 22.773587
5 w2 14.979709
5 w3 21.030983
6 w1 26.597914
6 w2 16.761055
6 w3 30.579083
7 w1 27.504404
7 w2 21.890577
7 w3 27.339127
8 w1 18.381024
8 w2 18.431217
8 w3 11.965442
9 w1 20.175245
9 w2 23.378171
9 w3 4.515269
10 w1 26.441250
10 w2 19.190304
10 w3 0.000000
11 w1 23.469973
11 w2 19.838739
11 w3 0.000000

0 w1 24.060958
0 w2 15.528517
0 w3 0.000000
1 w1 29.304462
1 w2 20.177675
1 w3 0.000000
2 w1 26.570411
2 w2 14.818468
2 w3 4.342662
3 w1 29.654585
3 w2 8.315658
3 w3 17.069268
4 w1 23.749973
4 w2 9.406292
4 w3 23.308634
5 w1 26.526367
5 w2 17.153349
5 w3 31.159783
6 w1 23.701781
6 w2 25.561671
6 w3 34.051881
7 w1 22.294306
7 w2 32.193439
7 w3 26.157240
8 w1 24.567311
8 w2 28.203708
8 w3 15.561810
9 w1 30.735910
9 w2 26.318077
9 w3 7.053982
10 w1 33.863071
10 w2 30.841507
10 w3 0.000000
11 w1 35.588663
11 w2 32.713853
11 w3 0.000000

0 w1 38.568214
0 w2 20.394744
0 w3 0.000000
1 w1 34.639185
1 w2 23.832299
1 w3 0.000000
2 w1 38.395129
2 w2 21.127676
2 w3 5.985864
3 w1 30.069220
3 w2 15.990835
3 w3 21.873704
4 w1 23.211684
4 w2 13.151953
4 w3 23.376331
5 w1 16.422627
5 w2 19.760795
5 w3 33.865570
6 w1 14.278329
6 w2 13.934476
6 w3 33.365395
7 w1 21.697355
7 w2 24.869776
7 w3 30.652821
8 w1 18.551438
8 w2 26.231547
8 w3 13.326055
9 w1 16.201932
9 w2 31.064472
9 w3 4.552781
10 w1 36.117460
10 w2 33.825622
10 w3 0.000000
11 w1 41.707232
11 w2 39.831122
11 w3 0.000000

0 w1 36.285826
0 w2 33.265830
0 w3 0.000000
1 w1 35.838717
1 w2 24.047884
1 w3 0.000000
2 w1 36.320322
2 w2 17.346549
2 w3 6.372989
3 w1 29.305671
3 w2 17.661912
3 w3 15.550797
4 w1 32.902612
4 w2 21.717041
4 w3 15.108458
5 w1 29.971020
5 w2 25.258999
5 w3 23.845575
6 w1 31.088050
6 w2 24.120741
6 w3 19.438371
7 w1 31.324382
7 w2 23.623940
7 w3 9.612594
8 w1 33.154699
8 w2 26.375777
8 w3 10.402922
9 w1 24.352672
9 w2 23.293881
9 w3 2.982605
10 w1 26.427936
10 w2 28.422482
10 w3 0.000000
11 w1 35.474041
11 w2 25.071171
11 w3 0.000000

0 w1 40.487580
0 w2 26.060490
0 w3 0.000000
1 w1 48.938182
1 w2 23.187633
1 w3 0.000000
2 w1 43.717109
2 w2 27.419010
2 w3 4.967799
3 w1 43.451723
3 w2 21.326680
3 w3 17.805569
4 w1 31.573879
4 w2 18.068643
4 w3 30.724617
5 w1 28.334071
5 w2 20.238077
5 w3 40.000000
6 w1 26.216598
6 w2 19.685942
6 w3 35.025331
7 w1 17.531979
7 w2 26.931602
7 w3 30.603522
8 w1 17.991039
8 w2 25.596376
8 w3 18.406003
9 w1 22.975906
9 w2 24.955540
9 w3 7.436743
10 w1 17.472293
10 w2 24.084215
10 w3 0.000000
11 w1 24.878960
11 w2 26.780860
11 w3 0.000000

0 w1 34.427295
0 w2 25.727401
0 w3 0.000000
1 w1 29.506295
1 w2 17.548994
1 w3 0.000000
2 w1 26.506044
2 w2 16.819248
2 w3 7.171656
3 w1 32.783432
3 w2 23.739720
3 w3 15.908350
4 w1 24.397126
4 w2 23.481974
4 w3 22.788526
5 w1 29.098419
5 w2 23.077179
5 w3 31.540207
6 w1 29.417031
6 w2 27.584317
6 w3 30.640999
7 w1 28.176413
7 w2 29.564700
7 w3 24.901510
8 w1 31.990385
8 w2 29.912284
8 w3 22.173815
9 w1 30.613046
9 w2 35.355572
9 w3 7.425579
10 w1 31.948773
10 w2 41.333485
10 w3 0.000000
11 w1 29.977427
11 w2 31.230192
11 w3 0.000000

0 w1 45.621002
0 w2 31.634736
0 w3 0.000000
1 w1 38.227382
1 w2 27.517255
1 w3 0.000000
2 w1 46.376055
2 w2 22.778333
2 w3 7.790688
3 w1 40.806530
3 w2 17.262163
3 w3 16.561512
4 w1 32.108506
4 w2 8.975577
4 w3 23.744986
5 w1 28.607843
5 w2 13.900004
5 w3 18.737251
6 w1 31.167534
6 w2 22.005826
6 w3 27.631185
7 w1 33.504993
7 w2 25.225773
7 w3 26.530904
8 w1 28.222019
8 w2 28.321157
8 w3 16.450123
9 w1 28.866172
9 w2 34.935363
9 w3 6.603339
10 w1 31.400132
10 w2 32.313362
10 w3 0.000000
11 w1 30.459903
11 w2 27.950578
11 w3 0.000000

0 w1 31.871211
0 w2 25.519552
0 w3 0.000000
1 w1 44.928387
1 w2 30.912251
1 w3 0.000000
2 w1 41.209755
2 w2 33.694623
2 w3 7.017741
3 w1 37.382454
3 w2 26.977620
3 w3 17.054124
4 w1 39.808660
4 w2 24.423380
4 w3 32.262877
5 w1 27.662579
5 w2 24.733193
5 w3 24.484114
6 w1 33.687888
6 w2 25.490242
6 w3 24.726389
7 w1 32.896315
7 w2 33.323710
7 w3 17.154043
8 w1 28.374439
8 w2 27.121140
8 w3 13.728424
9 w1 28.299733
9 w2 28.642997
9 w3 4.667528
10 w1 29.141176
10 w2 27.059454
10 w3 0.000000
11 w1 40.614829
11 w2 22.622881
11 w3 0.000000

0 w1 37.528841
0 w2 26.013666
0 w3 0.000000
1 w1 37.349880
1 w2 19.902720
1 w3 0.000000
2 w1 36.429850
2 w2 18.912734
2 w3 6.652361
3 w1 32.107581
3 w2 12.003537
3 w3 17.138964
4 w1 29.425482
4 w2 14.736724
4 w3 26.789325
5 w1 31.243583
5 w2 14.929750
5 w3 23.212488
6 w1 33.082931
6 w2 27.169276
6 w3 21.228998
7 w1 22.248733
7 w2 24.375696
7 w3 16.933684
8 w1 15.210233
8 w2 25.921815
8 w3 8.950954
9 w1 15.364418
9 w2 30.697091
9 w3 3.665102
10 w1 23.855692
10 w2 32.884506
10 w3 0.000000
11 w1 29.171093
11 w2 30.509087
11 w3 0.000000

0 w1 43.048320
0 w2 32.424323
0 w3 0.000000
1 w1 41.939394
1 w2 30.331458
1 w3 0.000000
2 w1 48.907153
2 w2 32.349291
2 w3 5.607310
3 w1 41.436181
3 w2 20.748079
3 w3 15.088315
4 w1 34.963034
4 w2 30.445090
4 w3 22.450567
5 w1 19.694043
5 w2 20.767605
5 w3 23.989266
6 w1 13.443914
6 w2 17.262026
6 w3 21.179717
7 w1 17.821476
7 w2 21.794097
7 w3 16.008754
8 w1 24.311277
8 w2 25.015715
8 w3 11.847153
9 w1 19.410420
9 w2 24.128510
9 w3 6.031743
10 w1 17.529000
10 w2 25.331678
10 w3 0.000000
11 w1 24.546867
11 w2 27.026299
11 w3 0.000000

0 w1 37.884138
0 w2 31.583747
0 w3 0.000000
1 w1 30.198338
1 w2 20.755821
1 w3 0.000000
2 w1 40.672372
2 w2 22.566162
2 w3 8.645274
3 w1 33.091255
3 w2 18.874586
3 w3 17.376158
4 w1 31.499516
4 w2 13.151360
4 w3 26.343976
5 w1 32.706387
5 w2 14.179259
5 w3 20.111171
6 w1 27.810037
6 w2 17.540891
6 w3 10.186083
7 w1 28.091561
7 w2 24.637704
7 w3 13.801956
8 w1 36.944090
8 w2 31.274870
8 w3 10.888599
9 w1 34.544879
9 w2 28.874145
9 w3 3.925987
10 w1 36.466246
10 w2 29.234818
10 w3 0.000000
11 w1 45.680512
11 w2 35.010346
11 w3 0.000000

0 w1 46.598343
0 w2 33.636825
0 w3 0.000000
1 w1 43.925450
1 w2 35.494037
1 w3 0.000000
2 w1 40.223767
2 w2 22.059814
2 w3 5.291954
3 w1 38.412249
3 w2 26.204407
3 w3 12.649468
4 w1 33.253329
4 w2 21.118369
4 w3 16.143366
5 w1 22.107230
5 w2 19.875458
5 w3 12.173917
6 w1 21.492440
6 w2 21.999267
6 w3 15.413858
7 w1 16.076744
7 w2 18.403291
7 w3 25.034728
8 w1 12.279557
8 w2 28.656004
8 w3 18.231063
9 w1 18.326164
9 w2 24.981502
9 w3 8.030602
10 w1 33.775815
10 w2 26.413121
10 w3 0.000000
11 w1 40.761457
11 w2 30.687581
11 w3 0.000000

0 w1 37.857711
0 w2 30.063526
0 w3 0.000000
1 w1 49.248629
1 w2 25.819518
1 w3 0.000000
2 w1 42.588569
2 w2 22.446721
2 w3 7.375781
3 w1 35.474943
3 w2 19.934643
3 w3 18.190376
4 w1 38.758921
4 w2 20.822050
4 w3 28.292203
5 w1 33.635586
5 w2 20.766783
5 w3 28.264858
6 w1 27.535105
6 w2 19.509227
6 w3 31.732972
7 w1 17.215372
7 w2 26.846417
7 w3 28.095368
8 w1 20.205807
8 w2 25.584583
8 w3 16.383977
9 w1 26.485652
9 w2 32.207681
9 w3 6.862846
10 w1 35.479231
10 w2 31.100375
10 w3 0.000000
11 w1 29.184395
11 w2 31.628809
11 w3 0.000000

0 w1 32.380832
0 w2 32.341604
0 w3 0.000000
1 w1 21.959675
1 w2 23.652282
1 w3 0.000000
2 w1 33.270859
2 w2 31.077256
2 w3 4.762008
3 w1 33.496013
3 w2 23.240018
3 w3 14.886954
4 w1 33.375074
4 w2 26.370908
4 w3 17.236638
5 w1 36.635828
5 w2 22.036838
5 w3 23.935852
6 w1 34.993509
6 w2 27.908873
6 w3 20.079145
7 w1 25.785933
7 w2 26.110975
7 w3 18.746174
8 w1 31.027698
8 w2 25.244893
8 w3 15.850137
9 w1 33.081219
9 w2 32.190038
9 w3 7.020897
10 w1 41.735497
10 w2 36.133480
10 w3 0.000000
11 w1 43.913941
11 w2 41.032303
11 w3 0.000000

0 w1 50.145932
0 w2 34.595068
0 w3 0.000000
1 w1 41.246751
1 w2 20.849609
1 w3 0.000000
2 w1 34.758651
2 w2 21.193492
2 w3 3.145386
3 w1 39.863999
3 w2 22.017312
3 w3 11.900453
4 w1 29.954765
4 w2 16.626929
4 w3 13.472699
5 w1 22.956684
5 w2 17.984271
5 w3 18.988148
6 w1 14.098086
6 w2 18.183718
6 w3 16.403738
7 w1 17.386835
7 w2 29.824458
7 w3 21.462393
8 w1 19.572014
8 w2 23.541084
8 w3 10.023250
9 w1 15.084138
9 w2 28.488759
9 w3 3.670185
10 w1 24.095853
10 w2 27.149354
10 w3 0.000000
11 w1 37.279774
11 w2 26.961389
11 w3 0.000000

0 w1 34.296014
0 w2 28.962076
0 w3 0.000000
1 w1 31.007639
1 w2 18.658014
1 w3 0.000000
2 w1 34.644128
2 w2 28.749725
2 w3 3.395337
3 w1 38.345204
3 w2 25.132548
3 w3 9.187609
4 w1 31.672452
4 w2 20.721650
4 w3 14.147722
5 w1 36.788089
5 w2 15.815145
5 w3 22.704885
6 w1 30.164280
6 w2 18.882242
6 w3 24.125938
7 w1 29.899171
7 w2 25.530966
7 w3 23.358824
8 w1 30.947271
8 w2 21.848693
8 w3 20.355977
9 w1 40.954117
9 w2 34.100969
9 w3 9.053998
10 w1 31.671632
10 w2 31.767682
10 w3 0.000000
11 w1 32.079386
11 w2 33.672322
11 w3 0.000000

0 w1 35.655881
0 w2 22.176364
0 w3 0.000000
1 w1 37.022352
1 w2 19.425466
1 w3 0.000000
2 w1 45.125794
2 w2 16.797781
2 w3 3.871036
3 w1 33.813345
3 w2 21.330973
3 w3 19.797187
4 w1 31.749110
4 w2 17.413117
4 w3 21.946410
5 w1 32.087712
5 w2 16.923710
5 w3 32.037574
6 w1 33.142912
6 w2 22.917335
6 w3 31.635454
7 w1 31.402510
7 w2 32.933402
7 w3 20.187330
8 w1 35.140876
8 w2 32.554128
8 w3 12.516707
9 w1 33.720622
9 w2 32.550959
9 w3 4.014061
10 w1 26.554041
10 w2 27.159922
10 w3 0.000000
11 w1 41.437560
11 w2 32.891341
11 w3 0.000000

0 w1 38.771595
0 w2 28.909007
0 w3 0.000000
1 w1 33.721043
1 w2 20.497547
1 w3 0.000000
2 w1 32.410451
2 w2 15.032281
2 w3 6.653202
3 w1 29.327875
3 w2 19.612155
3 w3 15.790147
4 w1 25.904837
4 w2 18.731940
4 w3 20.623935
5 w1 20.373923
5 w2 17.072305
5 w3 27.109599
6 w1 22.868595
6 w2 25.957912
6 w3 17.642804
7 w1 20.417525
7 w2 24.912324
7 w3 18.929039
8 w1 19.929690
8 w2 25.354113
8 w3 16.606966
9 w1 24.831543
9 w2 24.435258
9 w3 8.213331
10 w1 33.620997
10 w2 27.050783
10 w3 0.000000
11 w1 31.822080
11 w2 31.866483
11 w3 0.000000

0 w1 31.924927
0 w2 26.308692
0 w3 0.000000
1 w1 35.997483
1 w2 24.732863
1 w3 0.000000
2 w1 33.010349
2 w2 7.100534
2 w3 5.500623
3 w1 20.501575
3 w2 10.759654
3 w3 17.641794
4 w1 22.814770
4 w2 12.456671
4 w3 21.812555
5 w1 20.564895
5 w2 13.816881
5 w3 21.186659
6 w1 14.714638
6 w2 22.083733
6 w3 22.628756
7 w1 22.195386
7 w2 24.700400
7 w3 21.125535
8 w1 22.289896
8 w2 29.424315
8 w3 17.804110
9 w1 26.946517
9 w2 28.574795
9 w3 5.374460
10 w1 38.613767
10 w2 31.172348
10 w3 0.000000
11 w1 46.084153
11 w2 36.742630
11 w3 0.000000

0 w1 42.395814
0 w2 40.546578
0 w3 0.000000
1 w1 45.310436
1 w2 31.626699
1 w3 0.000000
2 w1 35.103470
2 w2 25.732433
2 w3 5.750684
3 w1 32.262959
3 w2 16.794423
3 w3 9.669517
4 w1 27.029196
4 w2 11.434466
4 w3 21.114544
5 w1 29.183690
5 w2 28.009053
5 w3 30.149836
6 w1 22.884229
6 w2 22.268878
6 w3 8.670988
7 w1 18.956002
7 w2 23.733278
7 w3 18.908844
8 w1 24.297258
8 w2 30.150743
8 w3 15.353745
9 w1 30.247397
9 w2 37.666735
9 w3 4.745850
10 w1 30.983389
10 w2 29.160065
10 w3 0.000000
11 w1 40.795218
11 w2 33.765898
11 w3 0.000000

0 w1 41.976515
0 w2 29.531974
0 w3 0.000000
1 w1 40.027478
1 w2 27.847351
1 w3 0.000000
2 w1 42.672087
2 w2 25.500023
2 w3 5.420800
3 w1 37.037372
3 w2 20.106069
3 w3 16.948068
4 w1 30.351010
4 w2 20.144975
4 w3 20.418437
5 w1 18.910668
5 w2 22.074152
5 w3 17.930326
6 w1 22.852257
6 w2 25.099629
6 w3 13.391705
7 w1 17.543299
7 w2 23.440463
7 w3 12.528303
8 w1 14.515315
8 w2 28.340543
8 w3 11.209209
9 w1 23.264956
9 w2 28.638922
9 w3 5.689535
10 w1 24.545318
10 w2 29.043779
10 w3 0.000000
11 w1 30.980761
11 w2 27.178808
11 w3 0.000000

0 w1 35.728619
0 w2 27.815484
0 w3 0.000000
1 w1 33.470562
1 w2 25.978149
1 w3 0.000000
2 w1 33.046971
2 w2 23.121152
2 w3 7.999190
3 w1 19.173142
3 w2 17.508896
3 w3 13.848750
4 w1 28.481799
4 w2 17.596083
4 w3 17.360900
5 w1 23.897003
5 w2 19.378081
5 w3 19.261490
6 w1 21.598614
6 w2 16.422185
6 w3 20.194113
7 w1 24.370887
7 w2 30.561499
7 w3 23.642898
8 w1 26.430641
8 w2 35.775769
8 w3 19.585636
9 w1 37.138549
9 w2 40.426766
9 w3 7.131285
10 w1 38.697267
10 w2 37.821947
10 w3 0.000000
11 w1 40.637846
11 w2 31.418578
11 w3 0.000000

0 w1 37.373428
0 w2 20.499166
0 w3 0.000000
1 w1 37.329952
1 w2 14.889936
1 w3 0.000000
2 w1 39.630209
2 w2 18.308062
2 w3 8.707208
3 w1 44.382939
3 w2 15.775026
3 w3 21.400458
4 w1 37.411253
4 w2 19.775321
4 w3 29.436611
5 w1 26.577265
5 w2 17.542478
5 w3 23.530737
6 w1 19.332110
6 w2 19.624480
6 w3 16.019838
7 w1 14.417595
7 w2 24.521735
7 w3 17.234668
8 w1 20.756465
8 w2 20.526181
8 w3 10.859583
9 w1 21.015227
9 w2 25.768699
9 w3 4.200729
10 w1 31.371016
10 w2 29.364738
10 w3 0.000000
11 w1 34.617342
11 w2 32.184013
11 w3 0.000000

0 w1 43.128193
0 w2 32.135784
0 w3 0.000000
1 w1 42.135650
1 w2 29.500129
1 w3 0.000000
2 w1 44.492964
2 w2 27.083570
2 w3 8.204216
3 w1 39.387856
3 w2 27.751005
3 w3 17.437404
4 w1 23.581019
4 w2 25.933269
4 w3 22.485231
5 w1 17.480827
5 w2 20.698000
5 w3 19.613292
6 w1 28.999067
6 w2 26.321145
6 w3 15.344694
7 w1 28.530965
7 w2 26.673821
7 w3 26.236358
8 w1 21.609572
8 w2 19.417538
8 w3 16.052171
9 w1 22.382832
9 w2 23.804116
9 w3 2.930103
10 w1 29.345600
10 w2 34.469733
10 w3 0.000000
11 w1 39.929915
11 w2 31.124520
11 w3 0.000000

0 w1 42.485742
0 w2 28.650140
0 w3 0.000000
1 w1 43.768056
1 w2 24.051318
1 w3 0.000000
2 w1 37.428570
2 w2 14.457545
2 w3 9.740390
3 w1 31.584479
3 w2 13.321294
3 w3 19.549300
4 w1 20.062985
4 w2 8.567645
4 w3 20.411769
5 w1 16.631988
5 w2 13.602347
5 w3 29.142683
6 w1 14.774068
6 w2 19.611264
6 w3 29.301066
7 w1 11.717280
7 w2 22.845418
7 w3 18.483194
8 w1 22.466472
8 w2 29.277806
8 w3 14.684785
9 w1 19.128299
9 w2 29.631265
9 w3 4.605680
10 w1 29.679767
10 w2 30.669601
10 w3 0.000000
11 w1 38.410161
11 w2 33.874282
11 w3 0.000000

0 w1 45.623697
0 w2 30.377147
0 w3 0.000000
1 w1 43.698670
1 w2 24.021779
1 w3 0.000000
2 w1 39.137798
2 w2 27.522217
2 w3 7.855120
3 w1 34.611203
3 w2 28.540765
3 w3 16.999372
4 w1 33.331180
4 w2 27.235791
4 w3 23.993981
5 w1 40.937534
5 w2 27.961707
5 w3 20.789202
6 w1 38.834528
6 w2 27.029163
6 w3 21.526835
7 w1 16.339783
7 w2 28.752908
7 w3 22.656871
8 w1 24.422888
8 w2 34.206382
8 w3 21.584577
9 w1 27.288889
9 w2 36.908328
9 w3 6.336005
10 w1 29.778905
10 w2 38.046355
10 w3 0.000000
11 w1 28.092116
11 w2 33.483827
11 w3 0.000000

0 w1 29.996495
0 w2 29.940467
0 w3 0.000000
1 w1 26.577670
1 w2 19.402118
1 w3 0.000000
2 w1 22.371542
2 w2 17.502274
2 w3 7.585373
3 w1 28.627566
3 w2 12.714283
3 w3 15.430817
4 w1 26.863199
4 w2 18.333802
4 w3 18.712071
5 w1 18.374112
5 w2 21.699403
5 w3 28.207745
6 w1 20.964866
6 w2 20.580824
6 w3 27.912856
7 w1 21.210344
7 w2 27.482929
7 w3 17.301815
8 w1 23.529156
8 w2 28.723490
8 w3 10.145769
9 w1 27.420225
9 w2 30.979184
9 w3 4.432495
10 w1 32.859147
10 w2 26.543861
10 w3 0.000000
11 w1 37.172584
11 w2 29.752508
11 w3 0.000000

0 w1 32.612106
0 w2 20.786183
0 w3 0.000000
1 w1 37.000182
1 w2 29.751776
1 w3 0.000000
2 w1 32.602534
2 w2 26.338775
2 w3 5.368237
3 w1 24.734049
3 w2 29.869084
3 w3 15.582953
4 w1 29.736635
4 w2 26.447909
4 w3 29.956916
5 w1 28.206670
5 w2 28.498314
5 w3 23.969939
6 w1 18.411469
6 w2 30.261261
6 w3 31.274042
7 w1 23.023106
7 w2 30.307856
7 w3 24.934719
8 w1 20.857180
8 w2 35.764681
8 w3 18.601467
9 w1 28.282073
9 w2 35.979046
9 w3 8.413681
10 w1 34.503028
10 w2 37.487618
10 w3 0.000000
11 w1 39.837783
11 w2 42.686024
11 w3 0.000000

0 w1 41.056073
0 w2 37.867399
0 w3 0.000000
1 w1 44.625889
1 w2 24.774827
1 w3 0.000000
2 w1 34.625923
2 w2 17.744199
2 w3 7.088235
3 w1 30.722650
3 w2 20.262936
3 w3 25.000000
4 w1 32.140744
4 w2 22.710640
4 w3 24.636032
5 w1 24.426418
5 w2 16.965943
5 w3 22.433139
6 w1 16.392828
6 w2 16.653019
6 w3 21.434977
7 w1 12.655325
7 w2 15.283438
7 w3 12.983401
8 w1 18.987261
8 w2 23.316343
8 w3 15.878243
9 w1 28.390244
9 w2 27.546446
9 w3 7.296117
10 w1 23.780818
10 w2 36.810960
10 w3 0.000000
11 w1 30.230653
11 w2 28.007079
11 w3 0.000000

0 w1 25.231061
0 w2 21.446508
0 w3 0.000000
1 w1 31.124630
1 w2 19.191774
1 w3 0.000000
2 w1 27.227551
2 w2 18.495851
2 w3 6.038816
3 w1 23.989771
3 w2 18.182292
3 w3 11.619809
4 w1 33.801712
4 w2 17.599838
4 w3 28.473660
5 w1 22.446067
5 w2 20.346474
5 w3 21.409818
6 w1 14.479376
6 w2 21.043918
6 w3 25.639082
7 w1 10.783343
7 w2 26.961346
7 w3 17.906931
8 w1 17.803917
8 w2 29.869418
8 w3 16.061851
9 w1 14.347282
9 w2 34.812384
9 w3 6.961862
10 w1 22.040067
10 w2 28.143707
10 w3 0.000000
11 w1 22.457884
11 w2 28.704215
11 w3 0.000000

0 w1 24.735968
0 w2 23.146861
0 w3 0.000000
1 w1 29.034254
1 w2 19.166205
1 w3 0.000000
2 w1 33.577277
2 w2 19.232530
2 w3 6.295899
3 w1 24.049003
3 w2 11.876255
3 w3 12.923914
4 w1 22.437874
4 w2 15.495123
4 w3 22.208609
5 w1 22.517329
5 w2 18.675964
5 w3 19.713869
6 w1 10.241567
6 w2 16.639926
6 w3 15.948801
7 w1 11.010230
7 w2 19.668045
7 w3 11.865841
8 w1 10.808377
8 w2 22.915279
8 w3 11.974059
9 w1 15.339537
9 w2 27.983070
9 w3 5.010864
10 w1 18.760545
10 w2 28.142712
10 w3 0.000000
11 w1 24.086508
11 w2 31.687977
11 w3 0.000000

0 w1 39.153069
0 w2 26.770294
0 w3 0.000000
1 w1 39.651710
1 w2 23.698761
1 w3 0.000000
2 w1 40.681857
2 w2 22.372069
2 w3 6.588072
3 w1 42.528962
3 w2 19.012536
3 w3 12.414963
4 w1 38.557541
4 w2 22.786680
4 w3 24.887843
5 w1 25.818984
5 w2 25.084557
5 w3 28.280001
6 w1 32.445204
6 w2 21.980698
6 w3 27.462188
7 w1 25.765124
7 w2 19.191006
7 w3 18.532677
8 w1 30.051812
8 w2 24.899508
8 w3 12.077996
9 w1 33.792749
9 w2 33.907853
9 w3 7.110148
10 w1 30.801507
10 w2 32.185607
10 w3 0.000000
11 w1 31.308859
11 w2 27.193746
11 w3 0.000000

0 w1 42.884518
0 w2 23.805345
0 w3 0.000000
1 w1 33.500059
1 w2 17.680225
1 w3 0.000000
2 w1 36.617510
2 w2 18.232122
2 w3 4.206579
3 w1 34.124982
3 w2 14.413799
3 w3 12.888563
4 w1 26.187142
4 w2 25.770630
4 w3 23.947873
5 w1 20.574185
5 w2 18.139064
5 w3 22.487015
6 w1 11.655125
6 w2 16.059117
6 w3 18.471007
7 w1 19.397848
7 w2 20.731799
7 w3 15.531579
8 w1 14.404759
8 w2 19.601036
8 w3 12.250856
9 w1 19.107613
9 w2 29.511854
9 w3 4.593844
10 w1 31.419571
10 w2 32.468890
10 w3 0.000000
11 w1 24.922854
11 w2 23.688937
11 w3 0.000000

0 w1 38.111470
0 w2 26.630597
0 w3 0.000000
1 w1 36.441011
1 w2 22.484776
1 w3 0.000000
2 w1 40.629850
2 w2 23.120283
2 w3 5.663942
3 w1 34.533985
3 w2 22.330315
3 w3 15.751740
4 w1 26.449290
4 w2 25.846743
4 w3 22.801210
5 w1 24.955348
5 w2 28.649511
5 w3 30.658975
6 w1 23.163112
6 w2 28.295603
6 w3 21.737511
7 w1 19.632959
7 w2 18.759759
7 w3 24.516140
8 w1 11.497837
8 w2 25.049876
8 w3 12.978758
9 w1 14.370699
9 w2 26.061401
9 w3 5.814784
10 w1 26.147573
10 w2 35.682992
10 w3 0.000000
11 w1 36.872516
11 w2 31.064839
11 w3 0.000000
