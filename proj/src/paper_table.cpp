#include "vgp/paper_table.hpp"

namespace vgp {

const std::array<PaperTable3Row, 31>& paper_table3() {
    static const std::array<PaperTable3Row, 31> rows = {{
        {219.49, 2.00, {220.31, 221.13, 222.76, 225.98, 229.15, 232.27}, {220.28, 221.10, 222.72, 225.93, 229.13, 232.26}, {219.86, 220.48, 221.71, 224.14, 226.53, 228.88}},
        {225.12, 1.95, {214.70, 215.54, 217.21, 220.52, 223.77, 226.97}, {214.74, 215.58, 217.25, 220.54, 223.82, 227.04}, {214.10, 214.74, 216.01, 218.53, 221.01, 223.45}},
        {231.04, 1.90, {208.80, 209.66, 211.38, 214.77, 218.10, 221.39}, {208.83, 209.69, 211.41, 214.80, 218.16, 221.47}, {208.18, 208.84, 210.16, 212.77, 215.34, 217.88}},
        {237.29, 1.85, {202.58, 203.47, 205.23, 208.71, 212.13, 215.51}, {202.53, 203.42, 205.18, 208.67, 212.13, 215.53}, {202.10, 202.79, 204.16, 206.86, 209.53, 212.16}},
        {243.88, 1.80, {196.02, 196.92, 198.73, 202.31, 205.83, 209.31}, {196.06, 196.97, 198.78, 202.37, 205.93, 209.43}, {195.38, 196.10, 197.51, 200.32, 203.10, 205.84}},
        {250.85, 1.75, {189.07, 190.01, 191.87, 195.55, 199.17, 202.75}, {189.16, 190.10, 191.96, 195.66, 199.33, 202.94}, {188.47, 189.21, 190.68, 193.61, 196.50, 199.36}},
        {258.22, 1.70, {181.72, 182.69, 184.60, 188.39, 192.12, 195.81}, {181.81, 182.78, 184.69, 188.52, 192.30, 196.03}, {181.36, 182.13, 183.66, 186.70, 189.71, 192.70}},
        {266.05, 1.65, {173.93, 174.92, 176.89, 180.79, 184.64, 188.45}, {173.98, 174.97, 176.95, 180.91, 184.83, 188.69}, {173.53, 174.33, 175.92, 179.09, 182.24, 185.37}},
        {274.36, 1.60, {165.64, 166.67, 168.70, 172.73, 176.70, 180.63}, {165.64, 166.66, 168.70, 172.82, 176.87, 180.88}, {165.45, 166.28, 167.94, 171.26, 174.56, 177.84}},
        {283.21, 1.55, {156.83, 157.88, 159.98, 164.14, 168.25, 172.33}, {156.75, 157.81, 159.91, 164.21, 168.42, 172.59}, {156.56, 157.43, 159.18, 162.66, 166.14, 169.60}},
        {292.65, 1.50, {147.42, 148.51, 150.68, 154.98, 159.24, 163.49}, {147.28, 148.38, 150.56, 155.05, 159.45, 163.79}, {146.81, 147.73, 149.56, 153.24, 156.93, 160.59}},
        {302.75, 1.45, {137.37, 138.50, 140.74, 145.20, 149.64, 154.08}, {137.50, 138.63, 140.89, 145.61, 150.21, 154.76}, {136.72, 137.69, 139.62, 143.53, 147.45, 151.34}},
        {313.56, 1.40, {126.60, 127.77, 130.09, 134.73, 139.39, 144.06}, {126.45, 127.64, 129.99, 135.00, 139.85, 144.63}, {126.29, 127.31, 129.36, 133.53, 137.71, 141.86}},
        {325.17, 1.35, {115.03, 116.24, 118.65, 123.51, 128.44, 133.40}, {115.01, 116.25, 118.71, 124.07, 129.20, 134.25}, {114.85, 115.94, 118.15, 122.64, 127.14, 131.59}},
        {337.68, 1.30, {102.57, 103.83, 106.34, 111.50, 116.79, 122.10}, {102.48, 103.80, 106.39, 112.20, 117.68, 123.05}, {102.35, 103.53, 105.94, 110.84, 115.72, 120.53}},
        {351.18, 1.25, {89.11, 90.42, 93.08, 98.68, 104.44, 110.16}, {89.15, 90.55, 93.33, 99.71, 105.61, 111.34}, {88.69, 90.00, 92.69, 98.12, 103.48, 108.71}},
        {365.82, 1.20, {74.53, 75.91, 78.82, 85.10, 91.45, 97.65}, {74.60, 76.15, 79.18, 86.32, 92.73, 98.88}, {74.52, 76.02, 79.08, 85.17, 91.09, 96.78}},
        {381.72, 1.15, {58.69, 60.22, 63.67, 70.94, 77.99, 84.70}, {59.15, 60.94, 64.34, 72.47, 79.48, 86.09}, {58.38, 60.20, 63.82, 70.85, 77.46, 83.68}},
        {399.07, 1.10, {41.51, 43.56, 48.03, 56.55, 64.32, 71.52}, {42.09, 44.29, 48.30, 57.74, 65.45, 72.55}, {41.76, 44.08, 48.53, 56.68, 64.03, 70.80}},
        {418.08, 1.05, {23.73, 27.03, 32.83, 42.51, 50.85, 58.42}, {24.37, 27.33, 32.25, 43.25, 51.63, 59.16}, {24.15, 27.36, 33.00, 42.47, 50.57, 57.83}},
        {438.98, 1.00, {8.92, 13.11, 19.53, 29.61, 38.11, 45.79}, {6.45, 11.13, 18.35, 29.17, 38.01, 45.79}, {6.76, 11.40, 18.43, 29.01, 37.61, 45.20}},
        {462.08, 0.95, {1.64, 4.40, 9.62, 18.70, 26.72, 34.12}, {1.19, 2.94, 7.41, 17.17, 25.85, 33.67}, {1.27, 3.02, 7.50, 17.09, 25.50, 33.01}},
        {487.76, 0.90, {0.10, 0.89, 3.68, 10.42, 17.24, 23.87}, {0.35, 0.96, 2.82, 8.69, 15.73, 22.75}, {0.40, 1.02, 2.94, 8.83, 15.71, 22.48}},
        {516.45, 0.85, {0.00, 0.09, 1.02, 4.96, 10.02, 15.46}, {0.10, 0.31, 1.03, 3.92, 8.48, 13.90}, {0.13, 0.34, 1.11, 4.09, 8.63, 13.93}},
        {548.73, 0.80, {0.00, 0.00, 0.19, 1.94, 5.12, 9.10}, {0.03, 0.10, 0.37, 1.66, 4.19, 7.80}, {0.04, 0.12, 0.41, 1.78, 4.37, 7.96}},
        {585.31, 0.75, {0.00, 0.00, 0.02, 0.60, 2.23, 4.76}, {0.01, 0.03, 0.12, 0.64, 1.85, 3.91}, {0.01, 0.04, 0.14, 0.72, 2.02, 4.14}},
        {627.11, 0.70, {0.00, 0.00, 0.00, 0.14, 0.80, 2.15}, {0.00, 0.01, 0.04, 0.23, 0.75, 1.77}, {0.00, 0.01, 0.04, 0.26, 0.83, 1.91}},
        {675.35, 0.65, {0.00, 0.00, 0.00, 0.02, 0.22, 0.81}, {0.00, 0.00, 0.01, 0.07, 0.27, 0.72}, {0.00, 0.00, 0.01, 0.09, 0.31, 0.81}},
        {731.63, 0.60, {0.00, 0.00, 0.00, 0.00, 0.05, 0.24}, {0.00, 0.00, 0.00, 0.02, 0.09, 0.26}, {0.00, 0.00, 0.00, 0.03, 0.11, 0.31}},
        {798.15, 0.55, {0.00, 0.00, 0.00, 0.00, 0.01, 0.06}, {0.00, 0.00, 0.00, 0.01, 0.02, 0.08}, {0.00, 0.00, 0.00, 0.01, 0.03, 0.10}},
        {877.96, 0.50, {0.00, 0.00, 0.00, 0.00, 0.00, 0.01}, {0.00, 0.00, 0.00, 0.00, 0.01, 0.02}, {0.00, 0.00, 0.00, 0.00, 0.01, 0.03}},
    }};
    return rows;
}

} // namespace vgp
